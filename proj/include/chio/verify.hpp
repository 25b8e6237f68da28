#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chio {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int n = 4;             // largest matrix size for exhaustive checks
    bool big = false;      // adds the n = 5 census and n = 5 failure/recipe checks
    unsigned workers = 0;  // 0 = default_workers()
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
// "all" expands to every suite; unknown names throw std::invalid_argument.
std::vector<CheckResult> run_verify(const std::vector<std::string>& suites, const VerifyOptions& opts);
std::string format_results(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

// Individual checks, shared with the acceptance driver.
CheckResult check_chio_identity(int n);
CheckResult check_rank_drop(int n);
CheckResult check_fibres(int n, unsigned workers);
CheckResult check_averaging(int n);
CheckResult check_recipe(int n, int k_max);
CheckResult check_worst_ratio(int n);
CheckResult check_kwise(int n, unsigned workers);
CheckResult check_failure_counts(int k, int n, unsigned workers);
CheckResult check_realizations(int k, int n, unsigned workers);
CheckResult check_relations_numeric(int n, unsigned workers);
CheckResult check_relations_symbolic(int n_lo, int n_hi);
CheckResult check_h_identity(int n);
CheckResult check_seventeen_sum(int n);
CheckResult check_rank_census(int s, int t, unsigned workers);
CheckResult check_singular(int n, unsigned workers);
CheckResult check_switch_group_laws(std::uint64_t seed);
CheckResult check_switch_compatibility(int n);
CheckResult check_transitivity(int max_edges);
CheckResult check_rigidity(int max_edges);
CheckResult check_rank_invariance(int max_dim);

}  // namespace chio
