#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chio {

using BigInt = boost::multiprecision::cpp_int;

// 1-based matrix position (i,j).
struct Index2 {
    int row = 1;
    int col = 1;
    auto operator<=>(const Index2&) const = default;
};

// Finite set of positions inside [s]x[t], kept sorted lexicographically.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(int s, int t, std::vector<Index2> members);

    static IndexSet full(int s, int t);   // [s]x[t]
    static IndexSet inner(int s, int t);  // [s-1]x[t-1]

    int s() const { return s_; }
    int t() const { return t_; }
    const std::vector<Index2>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Index2 p) const;
    bool within_inner() const;

    std::vector<int> p1() const;  // sorted distinct rows
    std::vector<int> p2() const;  // sorted distinct columns
    bool is_rectangular() const;
    bool subset_of(const IndexSet& other) const;

    bool operator==(const IndexSet&) const = default;

private:
    int s_ = 2;
    int t_ = 2;
    std::vector<Index2> members_;
};

IndexSet chio_extend(const IndexSet& inner);
bool is_chio_set(const IndexSet& set);

// Matrix with entries in {-1,+1} on a Chio set (or a full rectangle).
class SignMatrix {
public:
    SignMatrix(IndexSet domain, const std::vector<int>& values);  // values follow domain order

    static SignMatrix full(int s, int t, const std::vector<int>& row_major);
    // Bit (i-1)*t + (j-1) of code set means a_ij = +1.
    static SignMatrix from_code(int s, int t, std::uint64_t code);
    // Rows of '+'/'-' separated by '/', ',', ';' or whitespace.
    static SignMatrix parse_rows(const std::string& text);

    int s() const { return domain_.s(); }
    int t() const { return domain_.t(); }
    const IndexSet& domain() const { return domain_; }
    int at(int i, int j) const;  // 0 when (i,j) lies outside the domain
    bool is_full() const { return static_cast<int>(domain_.size()) == s() * t(); }

private:
    IndexSet domain_;
    std::vector<std::int8_t> cells_;
};

// B in {0,+-1}^I with I inside [s-1]x[t-1]; (s,t) is the pivot position.
class PartialTernaryMatrix {
public:
    PartialTernaryMatrix() = default;
    PartialTernaryMatrix(IndexSet domain, const std::vector<int>& values);

    // Fully specified on [s-1]x[t-1]; rows has s-1 rows of t-1 entries.
    static PartialTernaryMatrix full(const std::vector<std::vector<int>>& rows);
    static PartialTernaryMatrix empty(int s, int t);

    int s() const { return domain_.s(); }
    int t() const { return domain_.t(); }
    const IndexSet& domain() const { return domain_; }
    const std::vector<Index2>& positions() const { return domain_.members(); }
    const std::vector<std::int8_t>& values() const { return values_; }

    int dom() const { return static_cast<int>(values_.size()); }
    int supp() const;
    IndexSet support() const;
    std::optional<int> at(Index2 p) const;
    int value_or_zero(Index2 p) const { return at(p).value_or(0); }

    bool operator==(const PartialTernaryMatrix&) const = default;

private:
    IndexSet domain_;
    std::vector<std::int8_t> values_;
};

PartialTernaryMatrix chio_condense(const SignMatrix& a);
PartialTernaryMatrix abs_condense(const SignMatrix& a);

class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, const std::vector<long long>& row_major);

    static IntMatrix from(const SignMatrix& a);               // requires a full domain
    static IntMatrix from(const PartialTernaryMatrix& b);     // absent entries read as 0, shape (s-1)x(t-1)

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

// Unhalved condensate C_(s,t)(A) over Z: entries a_ij*a_st - a_it*a_sj.
IntMatrix chio_condensate_int(const SignMatrix& a);

BigInt det_int(const IntMatrix& m);
int rank_int(const IntMatrix& m);

// Fraction-free elimination on a small row-major buffer of machine integers.
// Safe for the single-digit dimensions and entries in {-2..2} used here.
int rank_small(std::vector<long long> m, int rows, int cols);
long long det_small(std::vector<long long> m, int n);

}  // namespace chio
