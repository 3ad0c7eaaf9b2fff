#include "barq/report.hpp"

#include <json.hpp>

namespace barq {

std::string report_to_json(const Report& r, const std::map<std::string, std::string>& header) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    for (auto& [k, v] : header) j[k] = v;
    j["all_pass"] = r.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (!c.note.empty()) jc["note"] = c.note;
        if (!c.table.empty()) {
            nlohmann::ordered_json t;
            for (auto& [deg, dim] : c.table) t[std::to_string(deg)] = dim;
            jc["table"] = t;
        }
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

} // namespace barq
