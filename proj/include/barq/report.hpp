#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace barq {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;        // first failing basis tuple, empty on pass
    std::string note;           // free-form detail (signs found, caps hit, ...)
    std::map<int, long> table;  // homology-style payload, keyed by degree
};

struct Report {
    std::deque<CheckResult> checks; // deque: references from add() stay valid

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    CheckResult& add(const std::string& name) {
        checks.push_back(CheckResult{name, true, {}, {}, {}});
        return checks.back();
    }
    void fail(const std::string& name, const std::string& witness) {
        checks.push_back(CheckResult{name, false, witness, {}, {}});
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    const CheckResult* find(const std::string& name) const {
        for (auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Deterministic JSON rendering (stable key order, no floats, no timestamps).
std::string report_to_json(const Report& r, const std::map<std::string, std::string>& header);

} // namespace barq
