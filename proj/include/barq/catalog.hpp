#pragma once

#include "barq/dg.hpp"

#include <optional>

namespace barq {

struct CatalogEntry {
    std::string name;
    std::string doc;
    DgAlgebra algebra;
    std::map<int, long> expected_homology; // of the algebra itself
};

// k, dual0 = Q[x]/(x^2) deg 0, ext1 = Lambda(xi) deg 1, cone = Q[eps]/(eps^2)
// with deg eps = -1 and d(eps) = 1, poly3 = Q[x]/(x^3) deg 0.
const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> catalog_find(const std::string& name);

} // namespace barq
