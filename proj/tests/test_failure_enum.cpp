#include <numeric>

#include "doctest.h"

#include "chio/failure_enum.hpp"

using namespace chio;

namespace {

// Counts F(k,n) by scanning every partial condensate and comparing the two
// measures directly.
CountReport scan_measures(int k, int n) {
    CountReport rep;
    rep.k = k;
    rep.n = n;
    const int cells = (n - 1) * (n - 1);
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    std::uint64_t pow3 = 1;
    for (int i = 0; i < k; ++i) pow3 *= 3;
    while (true) {
        std::vector<Index2> pos;
        for (int c : comb) pos.push_back({c / (n - 1) + 1, c % (n - 1) + 1});
        const IndexSet dom(n, n, pos);
        for (std::uint64_t code = 0; code < pow3; ++code) {
            std::vector<int> vals(k);
            std::uint64_t c = code;
            for (int q = 0; q < k; ++q, c /= 3) vals[q] = static_cast<int>(c % 3) - 1;
            const PartialTernaryMatrix b(dom, vals);
            rep.total_events += 1;
            const DyadicProb pc = p_chio(b), pl = p_lcf(b);
            if (pc == pl) continue;
            rep.failures += 1;
            if (pc.is_zero()) {
                rep.ratio_zero += 1;
            } else {
                rep.ratio_pow[pl.exponent() - pc.exponent()] += 1;
                rep.by_value[pc.exponent()] += 1;
            }
            rep.by_isotype[static_cast<int>(chio_profile(b).isotype)] += 1;
        }
        int i = k - 1;
        while (i >= 0 && comb[i] == cells - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return rep;
}

}  // namespace

TEST_CASE("brute-force measure comparison agrees with the pruned count at n = 4") {
    for (int k = 0; k <= 6; ++k) {
        CountReport brute = scan_measures(k, 4);
        CountReport fast = count_failures(k, 4, 1);
        fast.balanced_by_isotype = {};
        CHECK(brute == fast);
    }
}

TEST_CASE("no failures below four specified entries") {
    for (int k = 0; k <= 3; ++k) {
        CHECK(count_failures(k, 5, 1).failures == 0);
        std::size_t seen = 0;
        enumerate_failures(k, 5, [&](const FailureRecord&) { ++seen; });
        CHECK(seen == 0);
    }
}

TEST_CASE("frozen failure totals") {
    CHECK(count_failures(4, 4, 1).failures == 144);
    CHECK(count_failures(5, 4, 1).failures == 2160);
    CHECK(count_failures(6, 4, 1).failures == 12576);
    CHECK(count_failures(6, 5, 2).failures == 342144);
    CHECK(failure_count_formula(4, 4).failures == 144);
    CHECK(failure_count_formula(6, 6).failures == 3036800);
    CHECK(xi(4) == 144);
}

TEST_CASE("the streamed failures reproduce the aggregate count") {
    for (int k = 4; k <= 6; ++k) {
        CountReport agg;
        const CountReport fast = count_failures(k, 4, 1);
        std::vector<std::pair<std::vector<Index2>, std::vector<std::int8_t>>> order;
        enumerate_failures(k, 4, [&](const FailureRecord& r) {
            agg.failures += 1;
            if (r.ratio.zero) agg.ratio_zero += 1;
            else agg.ratio_pow[r.ratio.log2] += 1;
            agg.by_isotype[static_cast<int>(r.isotype)] += 1;
            CHECK(r.value == p_chio(r.b));
            order.emplace_back(r.b.positions(), r.b.values());
        });
        CHECK(agg.failures == fast.failures);
        CHECK(agg.ratio_zero == fast.ratio_zero);
        CHECK(agg.ratio_pow == fast.ratio_pow);
        CHECK(agg.by_isotype == fast.by_isotype);
        // index sets in lexicographic order, values in base-3 order
        for (std::size_t q = 1; q < order.size(); ++q) {
            if (order[q].first != order[q - 1].first) {
                CHECK(order[q - 1].first < order[q].first);
            } else {
                std::vector<int> a(order[q - 1].second.begin(), order[q - 1].second.end());
                std::vector<int> b(order[q].second.begin(), order[q].second.end());
                CHECK(a < b);
            }
        }
    }
}

TEST_CASE("worker count does not change the aggregate") {
    const CountReport one = count_failures(6, 5, 1);
    for (unsigned w : {2U, 3U, 8U}) CHECK(count_failures(6, 5, w) == one);
}

TEST_CASE("closed forms agree with enumeration at n = 4 and 5") {
    for (int n = 4; n <= 5; ++n)
        for (int k = 4; k <= 6; ++k) {
            CountReport got = count_failures(k, n, 1);
            got.balanced_by_isotype = {};
            CHECK(got == failure_count_formula(k, n));
        }
}

TEST_CASE("realization tables vanish where the paper lists nothing") {
    for (int t = 1; t <= 20; ++t) {
        const IsoType type = catalogue_type(t);
        if (t != 1) CHECK_THROWS(realization_count_formula(type, 4, 6));
    }
    CHECK_THROWS(realization_count_formula(IsoType::T1, 6, 6));
    CHECK(count_failures(6, 6, 1).by_isotype[static_cast<int>(IsoType::OtherNonforest)] == 0);
}

TEST_CASE("the sixth-order total needs the positive n^2 coefficient") {
    RationalPoly flipped = ex6_total_poly();
    for (auto& c : flipped.coeffs)
        if (c.first == 8144 && c.second == 3) c.first = -8144;
    CHECK(flipped.coeffs != ex6_total_poly().coeffs);
    const BigInt enumerated = count_failures(6, 4, 1).failures;
    CHECK(ex6_total_poly().eval(4) == enumerated);
    CHECK_THROWS(flipped.eval(4));
}

TEST_CASE("the seventeen-type sum excludes the six-circuit, not three isolated vertices") {
    for (int n = 4; n <= 8; ++n) {
        const CountReport f = failure_count_formula(6, n);
        BigInt corrected = 0, literal = 0;
        for (int t = 2; t <= 20; ++t) {
            if (t != 4 && t != 12) corrected += f.by_isotype[t];
            if (t != 4 && t != 13) literal += f.by_isotype[t];
        }
        const HCounts h = h_counts(n);
        CHECK(corrected == h.c4_not_k23);
        CHECK(literal != h.c4_not_k23);
        CHECK(h.c4_not_k23 == h.c4_not_k23_poly);
    }
}

TEST_CASE("linear relations hold on enumerated and closed-form counts") {
    for (const auto& r : linear_relations(count_failures(5, 5, 1), count_failures(6, 5, 1))) CHECK(r.holds());
    for (int n = 3; n <= 30; ++n)
        for (const auto& r : linear_relations_formula(n)) CHECK(r.holds());
}

TEST_CASE("circuit-based bound dominates the failure count") {
    for (int n = 4; n <= 6; ++n)
        for (int k = 4; k <= 6; ++k) CHECK(failure_density_bound(k, n) >= failure_count_formula(k, n).failures);
    CHECK(failure_density_bound(3, 5) == 0);
}

TEST_CASE("value partition of balanced realizations") {
    const CountReport got = count_failures(6, 5, 1);
    for (IsoType t : listed_types(6)) {
        const int i = catalogue_index(t);
        CHECK(got.balanced_by_isotype[i] == (got.by_isotype[i] >> catalogue_beta1(t)));
    }
    CHECK(value_exponent(IsoType::T1, 4) == 7);
    CHECK(value_exponent(IsoType::T12, 6) == 11);
}

TEST_CASE("argument checks") {
    CHECK_THROWS(count_failures(7, 5, 1));
    CHECK_THROWS(count_failures(5, 1, 1));
    CHECK_THROWS(count_failures(5, 3, 1));
    CHECK_THROWS(failure_count_formula(3, 5));
}
