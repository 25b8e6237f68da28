#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chio/matrix_core.hpp"
#include "chio/measures.hpp"
#include "chio/signed_graph.hpp"

namespace chio {

struct FailureRecord {
    PartialTernaryMatrix b;
    IsoType isotype = IsoType::Forest;
    Ratio ratio;
    DyadicProb value = DyadicProb::zero();
};

// Streams every B in {0,+-1}^I, I a k-subset of [n-1]^2, with beta1(X_B) >= 1.
// Index sets come in lexicographic order of their sorted position lists
// (positions ordered row-major); within one I the value tuples come in
// base-3 order with digit order -1 < 0 < +1, first position most significant.
void enumerate_failures(int k, int n, const std::function<void(const FailureRecord&)>& fn);

struct CountReport {
    int k = 0;
    int n = 0;
    BigInt total_events;
    BigInt failures;
    BigInt ratio_zero;
    std::map<int, BigInt> ratio_pow;   // log2 of ratio (>= 1) -> count
    std::map<int, BigInt> by_value;    // e of the value 2^-e -> count
    std::array<BigInt, kIsoTypeCount> by_isotype{};
    std::array<BigInt, kIsoTypeCount> balanced_by_isotype{};  // filled by enumeration only

    bool operator==(const CountReport&) const = default;
    BigInt ratio_count(int log2) const;
    BigInt value_count(int e) const;
};

// Brute-force count. Index sets are split into contiguous rank ranges, one
// per worker; per-worker tallies are summed at the end.
CountReport count_failures(int k, int n, unsigned workers = 0);

unsigned default_workers();

// Closed forms.
BigInt xi(int n);
std::vector<IsoType> listed_types(int k);
BigInt realization_count_formula(IsoType type, int k, int n);
int value_exponent(IsoType type, int k);  // value of a balanced realization
int catalogue_beta1(IsoType type);

struct RationalPoly {
    std::vector<std::pair<long long, long long>> coeffs;  // highest degree first, num/den
    BigInt eval(long long n) const;                       // throws unless the value is integral
};
const RationalPoly& ex6_total_poly();
const RationalPoly& ex6_ratio0_poly();
const RationalPoly& ex6_ratio2_poly();
const RationalPoly& ex6_ratio4_poly();
const RationalPoly& h_c4_not_k23_poly();

// Totals and ratio splits from the counting theorems; isotype and value
// splits from the realization tables and the value partitions.
CountReport failure_count_formula(int k, int n);

struct HCounts {
    BigInt c6;
    BigInt k23;
    BigInt c4_not_k23;       // h_geq - 3 h_K23
    BigInt c4_not_k23_poly;  // displayed degree-8 polynomial
    BigInt geq;
};
HCounts h_counts(int n);

struct RelationCheck {
    std::string name;
    BigInt lhs;
    BigInt rhs;
    bool holds() const { return lhs == rhs; }
};
std::vector<RelationCheck> linear_relations(const CountReport& k5, const CountReport& k6);
std::vector<RelationCheck> linear_relations_formula(int n);

// Sum over 1 <= j <= k/2 of 2^(2j) 3^(k-2j) C((n-1)^2-2j, k-2j) |Cir(2j,n)|.
BigInt failure_density_bound(int k, int n);

}  // namespace chio
