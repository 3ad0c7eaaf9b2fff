#pragma once

#include "barq/ainf.hpp"
#include "barq/binf.hpp"
#include "barq/catalog.hpp"
#include "barq/em.hpp"
#include "barq/simplicial.hpp"

namespace barq {

struct RunConfig {
    std::string suite = "all";
    int max_weight = 5;
    int max_arity = 4;
    int max_length = 3;
    std::string negative_control; // "", "standard-signs"
    int jobs = 1;
};

// documented hard caps (combinatorial growth)
constexpr int kMaxWeightCap = 7;
constexpr int kMaxArityCap = 5;
constexpr int kMaxLengthCap = 4;

bool validate_config(const RunConfig& c, std::string& err);

const std::vector<std::string>& suite_names();

// Runs one named suite for the given algebra.
Report run_suite(const DgAlgebra& a, const std::string& suite, const RunConfig& c);

// Runs the configured suite ("all" = every suite), honoring the jobs hint
// with deterministic report order.
Report run(const DgAlgebra& a, const RunConfig& c);

// The input-independent Delta_0 combinatorics suite.
Report delta0_report();

// Homology tables for the CLI `homology` verb.
std::map<int, long> homology_table(const DgAlgebra& a, const std::string& complex, int n, int ln_index);

} // namespace barq
