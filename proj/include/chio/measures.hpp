#pragma once

#include <compare>
#include <string>

#include "chio/matrix_core.hpp"
#include "chio/signed_graph.hpp"

namespace chio {

// Exact probability: zero or 2^-e.
class DyadicProb {
public:
    static DyadicProb zero() { return DyadicProb(true, 0); }
    static DyadicProb pow_half(int e);

    bool is_zero() const { return zero_; }
    int exponent() const;  // e for 2^-e; throws on zero

    DyadicProb operator*(const DyadicProb& o) const;
    bool operator==(const DyadicProb&) const = default;
    std::strong_ordering operator<=>(const DyadicProb& o) const;

    std::string str() const;  // "0" or "2^-e"

private:
    DyadicProb(bool z, int e) : zero_(z), exp_(e) {}
    bool zero_;
    int exp_;
};

// Exact sum of dyadic probabilities, kept as numerator / 2^denominator_exp.
class DyadicSum {
public:
    void add(const DyadicProb& p, const BigInt& multiplicity = 1);
    bool is_dyadic() const;        // zero or a power of 1/2
    DyadicProb value() const;      // throws unless is_dyadic()
    const BigInt& numerator() const { return num_; }
    int denominator_exp() const { return den_; }

private:
    BigInt num_ = 0;
    int den_ = 0;
};

// Entry-specification event E_B^J.
struct Event {
    PartialTernaryMatrix b;
    IndexSet j;
    Event(PartialTernaryMatrix b_, IndexSet j_);
    static Event full(PartialTernaryMatrix b_);  // J = [s-1]x[t-1]
};

// Exponent bookkeeping of a characterization: value is zero or 2^-exp.
struct ChioProfile {
    BettiData betti;
    bool balanced = false;
    IsoType isotype = IsoType::Forest;
};
ChioProfile chio_profile(const PartialTernaryMatrix& b);

DyadicProb p_lcf(const PartialTernaryMatrix& b);
DyadicProb p_chio(const PartialTernaryMatrix& b);
inline DyadicProb p_lcf(const Event& e) { return p_lcf(e.b); }
inline DyadicProb p_chio(const Event& e) { return p_chio(e.b); }

struct Ratio {
    bool zero = false;
    int log2 = 0;
    bool operator==(const Ratio&) const = default;
};
Ratio ratio_chio_lcf(const PartialTernaryMatrix& b);

int cover_height(const IndexSet& i, const IndexSet& j);
BigInt fibre_cardinality(const Event& e);

// (1/2)^supp * sum of p_chio over all signings of Supp(B) (zeros kept).
DyadicProb p_chio_averaged(const PartialTernaryMatrix& b);
// Push-forward of P_chio along entrywise absolute value, evaluated at the
// {0,1}-pattern b01 by summing P_chio over its signings.
DyadicProb p_chio_abs(const PartialTernaryMatrix& b01);

// Case analysis on B alone for dom(B) <= 6, sharing no code with the
// graph-theoretic evaluation above.
DyadicProb recipe_p_chio(const PartialTernaryMatrix& b);

}  // namespace chio
