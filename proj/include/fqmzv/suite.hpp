#pragma once

#include <vector>

#include "fqmzv/identities.hpp"

namespace fqmzv {

// One verification grid: a field, its test places, and the parameter ranges
// swept by every verifier.
struct SuiteGrid {
    nlohmann::json field;                           // {"q": n} or {"p", "ext_degree", "modulus"}
    std::vector<std::vector<long long>> places;     // v coefficient index lists, lowest first
    int max_depth = 2;
    long long max_exponent = 3;
    std::vector<int> levels = {1, 2};               // v-adic levels for orthogonality at mixed tuples
    int laurent_precision = 8;
    int laurent_depth = 2;
    long long laurent_max_exponent = 3;
    int kummer_pairs = 10;
    int kummer_max_level = 2;
    long long kummer_exponent_bound = 200;
    int measure_max_level = 2;
    std::vector<int> e_schedule = {1, 2, 3};
    int integral_target_level = 2;
    long long integral_max_exponent = 2;
    int work_level = 3;
};

struct SuiteConfig {
    std::vector<SuiteGrid> grids;
    unsigned long long seed = 1;
    int jobs = 1;
};

SuiteConfig default_suite_config();
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json suite_config_to_json(const SuiteConfig& cfg);

// Runs every verifier over the configured grids.  The report list and its
// order are functions of (config, seed) alone: tasks are generated
// deterministically up front (including all random draws) and may then be
// evaluated on `jobs` workers without affecting the output.
std::vector<Report> run_suite(const SuiteConfig& cfg);

}  // namespace fqmzv
