#include "barq/rational.hpp"

namespace barq {

Rat parse_rat(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace barq
