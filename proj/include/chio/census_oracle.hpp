#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "chio/failure_enum.hpp"
#include "chio/matrix_core.hpp"

namespace chio {

struct CensusConfig {
    int s = 2;
    int t = 2;
    unsigned workers = 0;  // 0 = default_workers()
    int max_bits = 25;     // budget on s*t
    bool compute_rank = true;
};

// One visited matrix. Bit (i-1)*t+(j-1) of code is set iff a_ij = +1. The
// condensate is given by two masks over the (s-1)x(t-1) positions in
// row-major order: supp (entry nonzero) and neg (entry -1).
struct CensusItem {
    std::uint64_t code = 0;
    std::uint32_t supp = 0;
    std::uint32_t neg = 0;
    int rank_a = -1;  // -1 unless compute_rank
    int rank_b = -1;
};

void condense_code(int s, int t, std::uint64_t code, std::uint32_t& supp, std::uint32_t& neg);
int rank_of_code(int s, int t, std::uint64_t code);
int rank_of_masks(int rows, int cols, std::uint32_t supp, std::uint32_t neg);

// Base-3 code of a fully specified condensate: digit 0 for 0, 1 for +1,
// 2 for -1; position p (row-major) has weight 3^p.
std::uint64_t ternary_code(int cells, std::uint32_t supp, std::uint32_t neg);
void ternary_decode(int cells, std::uint64_t code, std::uint32_t& supp, std::uint32_t& neg);
PartialTernaryMatrix matrix_from_masks(int s, int t, std::uint32_t supp, std::uint32_t neg);
std::uint64_t pow3(int e);

void check_census_budget(const CensusConfig& cfg);

// Visit every code in [lo, hi).
template <class Acc>
void census_range(const CensusConfig& cfg, std::uint64_t lo, std::uint64_t hi, Acc& acc) {
    CensusItem item;
    for (std::uint64_t code = lo; code < hi; ++code) {
        item.code = code;
        condense_code(cfg.s, cfg.t, code, item.supp, item.neg);
        if (cfg.compute_rank) {
            item.rank_a = rank_of_code(cfg.s, cfg.t, code);
            item.rank_b = rank_of_masks(cfg.s - 1, cfg.t - 1, item.supp, item.neg);
        }
        acc.visit(item);
    }
}

// Splits the code space into one contiguous range per worker; accumulators
// are merged in worker order.
template <class Acc>
Acc run_census(const CensusConfig& cfg, const std::function<Acc()>& make) {
    check_census_budget(cfg);
    const unsigned workers = cfg.workers == 0 ? default_workers() : cfg.workers;
    const std::uint64_t total = std::uint64_t{1} << (cfg.s * cfg.t);
    std::vector<Acc> accs;
    for (unsigned w = 0; w < workers; ++w) accs.push_back(make());
    auto job = [&](unsigned w) { census_range(cfg, total * w / workers, total * (w + 1) / workers, accs[w]); };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& th : pool) th.join();
    }
    for (unsigned w = 1; w < workers; ++w) accs[0].merge(accs[w]);
    return std::move(accs[0]);
}

// Preimage count of every fully specified condensate, by ternary code.
struct EmpiricalChio {
    int n = 0;
    std::vector<std::uint32_t> counts;
    std::uint64_t count(const PartialTernaryMatrix& full_b) const;
};
EmpiricalChio empirical_p_chio(int n, unsigned workers = 0);

struct FibreCheck {
    std::uint64_t condensates = 0;  // ternary codes examined
    std::uint64_t positive = 0;     // codes with a nonempty fibre
    std::uint64_t mismatches = 0;   // count != fibre_cardinality
    std::uint64_t unbalanced_hits = 0;
    bool ok() const { return mismatches == 0 && unbalanced_hits == 0; }
};
FibreCheck check_fibres(const EmpiricalChio& e);

struct RankCensus {
    int s = 0;
    int t = 0;
    std::uint64_t visited = 0;
    std::vector<std::uint64_t> rank_sign;        // {+-1}^{s x t} by rank
    std::vector<std::uint64_t> rank_condensate;  // condensates weighted by preimage size
    std::vector<std::uint64_t> rank_binary;      // {0,1}^{(s-1)x(t-1)} by rank
    std::uint64_t rank_drop_violations = 0;

    bool lemma_holds() const;          // P[Ra_r(sign)] = P_chio[Ra_{r-1}]
    bool uniform_after_forgetting() const;  // P_chio[Ra_R] = P[Ra_R({0,1})] for all R
    bool operator==(const RankCensus&) const = default;
};

// checkpoint: optional path; progress is flushed after every round and a
// rerun with the same path resumes from the stored position. max_rounds > 0
// stops early (the result then covers only the visited prefix).
RankCensus rank_census(int s, int t, unsigned workers = 0, const std::string& checkpoint = {},
                       std::uint64_t round_size = std::uint64_t{1} << 20, std::uint64_t max_rounds = 0);

struct SingularReport {
    int n = 0;
    std::uint64_t singular_sign = 0;    // det A = 0 among {+-1}^{n x n}
    std::uint64_t singular_binary = 0;  // rank < n-1 among {0,1}^{(n-1)x(n-1)}
    // Right side of the relative formulation: sum over B'' in {0,+-1}^{(n-1)^2}
    // with rank < n-1 of 2^-supp(B''), as numerator over 2^((n-1)^2).
    BigInt q4_right_numerator;
    int q4_right_denominator_exp = 0;
    bool prop_identity = false;  // singular_sign / 2^{n^2} == singular_binary / 2^{(n-1)^2}
};
SingularReport singular_count(int n, unsigned workers = 0);

struct KwiseReport {
    int n = 0;
    int k_max = 0;
    std::vector<std::uint64_t> events;         // by dom
    std::vector<std::uint64_t> disagreements;  // by dom, empirical measure != p_lcf
    std::vector<std::uint64_t> chio_mismatch;  // by dom, empirical measure != p_chio
    std::vector<bool> matches_enumeration;     // by dom, disagreement set == enumerated failures
    bool ok() const;
};
KwiseReport kwise_agreement_check(const EmpiricalChio& e, int k_max = 6);

// Checkpoint blob: "CHIOCENS\0", then little-endian u64 values.
void write_checkpoint(const std::string& path, const std::vector<std::uint64_t>& words);
bool read_checkpoint(const std::string& path, std::vector<std::uint64_t>& words);

}  // namespace chio
