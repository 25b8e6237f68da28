#include "chio/measures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace chio {

DyadicProb DyadicProb::pow_half(int e) {
    if (e < 0) throw std::invalid_argument("dyadic probability exponent must be non-negative");
    return DyadicProb(false, e);
}

int DyadicProb::exponent() const {
    if (zero_) throw std::logic_error("zero probability has no exponent");
    return exp_;
}

DyadicProb DyadicProb::operator*(const DyadicProb& o) const {
    if (zero_ || o.zero_) return zero();
    return pow_half(exp_ + o.exp_);
}

std::strong_ordering DyadicProb::operator<=>(const DyadicProb& o) const {
    if (zero_ || o.zero_) return (zero_ ? 0 : 1) <=> (o.zero_ ? 0 : 1);
    return o.exp_ <=> exp_;
}

std::string DyadicProb::str() const { return zero_ ? "0" : "2^-" + std::to_string(exp_); }

void DyadicSum::add(const DyadicProb& p, const BigInt& multiplicity) {
    if (p.is_zero() || multiplicity == 0) return;
    const int e = p.exponent();
    if (e > den_) {
        num_ <<= (e - den_);
        den_ = e;
    }
    num_ += multiplicity << (den_ - e);
}

bool DyadicSum::is_dyadic() const {
    if (num_ == 0) return true;
    if (num_ < 0) return false;
    // numerator must be a power of two not exceeding the denominator
    if ((num_ & (num_ - 1)) != 0) return false;
    return msb(num_) <= static_cast<unsigned>(den_);
}

DyadicProb DyadicSum::value() const {
    if (!is_dyadic()) throw std::logic_error("sum is not a dyadic probability");
    if (num_ == 0) return DyadicProb::zero();
    return DyadicProb::pow_half(den_ - static_cast<int>(msb(num_)));
}

Event::Event(PartialTernaryMatrix b_, IndexSet j_) : b(std::move(b_)), j(std::move(j_)) {
    if (j.s() != b.s() || j.t() != b.t()) throw std::invalid_argument("event: J and B have different dimensions");
    if (!j.within_inner()) throw std::invalid_argument("event: J must lie in [s-1]x[t-1]");
    if (!b.domain().subset_of(j)) throw std::invalid_argument("event: Dom(B) must be contained in J");
}

Event Event::full(PartialTernaryMatrix b_) {
    IndexSet j = IndexSet::inner(b_.s(), b_.t());
    return Event(std::move(b_), std::move(j));
}

ChioProfile chio_profile(const PartialTernaryMatrix& b) {
    const auto g = build_graph(b);
    ChioProfile p;
    p.betti = betti(g);
    p.balanced = is_balanced(g).balanced;
    p.isotype = classify_isotype(g);
    return p;
}

DyadicProb p_lcf(const PartialTernaryMatrix& b) { return DyadicProb::pow_half(b.dom() + b.supp()); }

DyadicProb p_chio(const PartialTernaryMatrix& b) {
    const auto g = build_graph(b);
    const auto bal = is_balanced(g);
    if (!bal.balanced) return DyadicProb::zero();
    const auto d = betti(g);
    return DyadicProb::pow_half(b.dom() + d.f0 - d.beta0);
}

Ratio ratio_chio_lcf(const PartialTernaryMatrix& b) {
    const auto g = build_graph(b);
    if (!is_balanced(g).balanced) return {true, 0};
    return {false, betti(g).beta1};
}

int cover_height(const IndexSet& i, const IndexSet& j) {
    if (!i.subset_of(j)) throw std::invalid_argument("cover height needs I inside J");
    return static_cast<int>(chio_extend(j).size() - i.size() - i.p1().size() - i.p2().size());
}

BigInt fibre_cardinality(const Event& e) {
    const auto g = build_graph(e.b);
    if (!is_balanced(g).balanced) return 0;
    const auto d = betti(g);
    const int ex = static_cast<int>(chio_extend(e.j).size()) - e.b.dom() - d.f0 + d.beta0;
    return BigInt(1) << ex;
}

namespace {

// Calls fn for every matrix with the same domain and support as b whose
// nonzero entries take either sign.
template <class Fn>
void for_each_signing(const PartialTernaryMatrix& b, Fn fn) {
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < b.values().size(); ++k)
        if (b.values()[k] != 0) nz.push_back(k);
    if (nz.size() > 30) throw std::invalid_argument("too many nonzero entries to enumerate signings");
    std::vector<int> vals(b.values().begin(), b.values().end());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nz.size()); ++m) {
        for (std::size_t q = 0; q < nz.size(); ++q) vals[nz[q]] = ((m >> q) & 1U) ? 1 : -1;
        fn(PartialTernaryMatrix(b.domain(), vals));
    }
}

}  // namespace

DyadicProb p_chio_averaged(const PartialTernaryMatrix& b) {
    DyadicSum sum;
    for_each_signing(b, [&](const PartialTernaryMatrix& bt) { sum.add(p_chio(bt) * DyadicProb::pow_half(b.supp())); });
    return sum.value();
}

DyadicProb p_chio_abs(const PartialTernaryMatrix& b01) {
    for (auto v : b01.values())
        if (v != 0 && v != 1) throw std::invalid_argument("p_chio_abs expects a {0,1} pattern");
    DyadicSum sum;
    for_each_signing(b01, [&](const PartialTernaryMatrix& bt) { sum.add(p_chio(bt)); });
    return sum.value();
}

namespace {

using Square = std::array<Index2, 4>;

// Matrix-4-circuits S inside Dom(B) on which B has no zero, in lexicographic
// order of (i, i', j, j').
std::vector<Square> signed_squares(const PartialTernaryMatrix& b) {
    std::vector<Square> out;
    const auto rows = b.domain().p1();
    const auto cols = b.domain().p2();
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t a2 = a + 1; a2 < rows.size(); ++a2)
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t c2 = c + 1; c2 < cols.size(); ++c2) {
                    Square sq{Index2{rows[a], cols[c]}, Index2{rows[a], cols[c2]}, Index2{rows[a2], cols[c]},
                              Index2{rows[a2], cols[c2]}};
                    bool ok = true;
                    for (const auto& p : sq) {
                        auto v = b.at(p);
                        if (!v || *v == 0) ok = false;
                    }
                    if (ok) out.push_back(sq);
                }
    return out;
}

template <class Range>
bool odd_plus_count(const PartialTernaryMatrix& b, const Range& positions) {
    int plus = 0;
    for (const auto& p : positions)
        if (b.value_or_zero(p) == 1) ++plus;
    return plus % 2 == 1;
}

bool all_nonzero(const PartialTernaryMatrix& b) {
    return std::none_of(b.values().begin(), b.values().end(), [](std::int8_t v) { return v == 0; });
}

// Six positions, three rows and three columns, two per row and two per column.
bool is_six_circuit_domain(const IndexSet& i) {
    if (i.size() != 6 || i.p1().size() != 3 || i.p2().size() != 3) return false;
    std::map<int, int> per_row, per_col;
    for (const auto& p : i.members()) {
        ++per_row[p.row];
        ++per_col[p.col];
    }
    for (auto [k, c] : per_row)
        if (c != 2) return false;
    for (auto [k, c] : per_col)
        if (c != 2) return false;
    return true;
}

bool is_two_by_three_block(const IndexSet& i) {
    const auto r = i.p1().size(), c = i.p2().size();
    return i.size() == 6 && r * c == 6 && ((r == 3 && c == 2) || (r == 2 && c == 3));
}

}  // namespace

DyadicProb recipe_p_chio(const PartialTernaryMatrix& b) {
    const int k = b.dom();
    const DyadicProb lcf = DyadicProb::pow_half(b.dom() + b.supp());
    if (k > 6) throw std::invalid_argument("recipe is defined for dom(B) <= 6 only");
    if (k <= 3) return lcf;

    if (k == 4) {
        const auto sq = signed_squares(b);
        if (sq.empty()) return lcf;
        return odd_plus_count(b, sq.front()) ? DyadicProb::zero() : DyadicProb::pow_half(7);
    }

    if (k == 5) {
        const auto sq = signed_squares(b);
        if (sq.empty()) return lcf;
        const Square& s = sq.front();
        if (odd_plus_count(b, s)) return DyadicProb::zero();
        for (const auto& p : b.positions()) {
            if (std::find(s.begin(), s.end(), p) != s.end()) continue;
            return b.value_or_zero(p) == 0 ? DyadicProb::pow_half(8) : DyadicProb::pow_half(9);
        }
        throw std::logic_error("unreachable");
    }

    // k == 6
    if (b.supp() < 4) return lcf;
    const auto sq = signed_squares(b);
    if (sq.empty()) {
        if (!is_six_circuit_domain(b.domain()) || !all_nonzero(b)) return lcf;
        return odd_plus_count(b, b.positions()) ? DyadicProb::zero() : DyadicProb::pow_half(11);
    }
    const Square& s = sq.front();
    if (odd_plus_count(b, s)) return DyadicProb::zero();
    std::vector<Index2> rest;
    for (const auto& p : b.positions())
        if (std::find(s.begin(), s.end(), p) == s.end()) rest.push_back(p);
    const int zeros = static_cast<int>(b.value_or_zero(rest[0]) == 0) + static_cast<int>(b.value_or_zero(rest[1]) == 0);
    if (zeros == 2) return DyadicProb::pow_half(9);
    if (zeros == 1) return DyadicProb::pow_half(10);
    if (!is_two_by_three_block(b.domain())) return DyadicProb::pow_half(11);
    for (std::size_t q = 1; q < sq.size(); ++q)
        if (odd_plus_count(b, sq[q])) return DyadicProb::zero();
    return DyadicProb::pow_half(10);
}

}  // namespace chio
