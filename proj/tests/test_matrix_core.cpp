#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"

#include "chio/matrix_core.hpp"

using namespace chio;
using boost::multiprecision::cpp_rational;

namespace {

// Laplace expansion along the first row.
BigInt cofactor_det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const BigInt term = BigInt(m[0][c]) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : BigInt(-term);
    }
    return acc;
}

// Gaussian elimination over the rationals.
int rational_rank(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<cpp_rational>> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const cpp_rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<long long>> to_rows(const std::vector<long long>& flat, int rows, int cols) {
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = flat[i * cols + j];
    return m;
}

}  // namespace

TEST_CASE("index sets stay sorted and inside the frame") {
    IndexSet s(3, 3, {{2, 1}, {1, 2}, {2, 1}});
    CHECK(s.size() == 2);
    CHECK(s.members()[0] == Index2{1, 2});
    CHECK(s.within_inner());
    CHECK_THROWS_AS(IndexSet(3, 3, {{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet(3, 3, {{0, 1}}), std::invalid_argument);
    CHECK(IndexSet::full(2, 3).size() == 6);
    CHECK(IndexSet::inner(4, 4).size() == 9);
}

TEST_CASE("chio extension adds the pivot row, column and corner") {
    const IndexSet e = chio_extend(IndexSet(3, 3, {{1, 1}}));
    CHECK(e == IndexSet(3, 3, {{1, 1}, {1, 3}, {3, 1}, {3, 3}}));
    CHECK(is_chio_set(e));
    CHECK_FALSE(is_chio_set(IndexSet(3, 3, {{1, 1}, {3, 3}})));
    CHECK(chio_extend(IndexSet(3, 3, {})) == IndexSet(3, 3, {{3, 3}}));
    const IndexSet two = chio_extend(IndexSet(4, 4, {{1, 2}, {3, 2}}));
    CHECK(two.size() == 2 + 2 + 1 + 1);
}

TEST_CASE("condensation matches the 2x2 minor definition on every 3x3 sign matrix") {
    for (std::uint64_t code = 0; code < 512; ++code) {
        const SignMatrix a = SignMatrix::from_code(3, 3, code);
        const PartialTernaryMatrix b = chio_condense(a);
        const PartialTernaryMatrix ab = abs_condense(a);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                const int twice = a.at(i, j) * a.at(3, 3) - a.at(i, 3) * a.at(3, j);
                CHECK(2 * b.value_or_zero({i, j}) == twice);
                CHECK(ab.value_or_zero({i, j}) == (twice != 0 ? 1 : 0));
            }
    }
}

TEST_CASE("chio identity against cofactor expansion at n = 3") {
    for (std::uint64_t code = 0; code < 512; ++code) {
        const SignMatrix a = SignMatrix::from_code(3, 3, code);
        std::vector<std::vector<long long>> am(3, std::vector<long long>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) am[i][j] = a.at(i + 1, j + 1);
        const IntMatrix c = chio_condensate_int(a);
        CHECK(det_int(c) == a.at(3, 3) * cofactor_det(am));
    }
}

TEST_CASE("bareiss determinant and rank agree with independent oracles") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
        std::vector<long long> flat(static_cast<std::size_t>(rows) * cols);
        const int sparsity = static_cast<int>(rng() % 3);
        for (auto& v : flat) v = (static_cast<int>(rng() % 3) < sparsity) ? 0 : static_cast<long long>(rng() % 5) - 2;
        const auto m = to_rows(flat, rows, cols);
        CHECK(rank_small(flat, rows, cols) == rational_rank(m));
        CHECK(rank_int(IntMatrix(rows, cols, flat)) == rational_rank(m));
        if (rows == cols) {
            CHECK(BigInt(det_small(flat, rows)) == cofactor_det(m));
            CHECK(det_int(IntMatrix(rows, cols, flat)) == cofactor_det(m));
        }
    }
}

TEST_CASE("sign matrix parsing") {
    const SignMatrix a = SignMatrix::parse_rows("+-/--");
    CHECK(a.s() == 2);
    CHECK(a.at(1, 1) == 1);
    CHECK(a.at(1, 2) == -1);
    CHECK(a.at(2, 2) == -1);
    CHECK_THROWS(SignMatrix::parse_rows("+-/-"));
    CHECK_THROWS(SignMatrix::parse_rows("+x"));
}

TEST_CASE("partial ternary matrices") {
    const PartialTernaryMatrix b = PartialTernaryMatrix::full({{1, 0}, {-1, 1}});
    CHECK(b.s() == 3);
    CHECK(b.dom() == 4);
    CHECK(b.supp() == 3);
    CHECK(b.at({1, 2}) == 0);
    const PartialTernaryMatrix e = PartialTernaryMatrix::empty(4, 4);
    CHECK(e.dom() == 0);
    CHECK_FALSE(e.at({1, 1}).has_value());
    CHECK_THROWS(PartialTernaryMatrix(IndexSet(3, 3, {{3, 1}}), {1}));
    CHECK_THROWS(PartialTernaryMatrix(IndexSet(3, 3, {{1, 1}}), {2}));
}

TEST_CASE("rank drops by one under half condensation for every 3x4 sign matrix") {
    for (std::uint64_t code = 0; code < (1U << 12); ++code) {
        const SignMatrix a = SignMatrix::from_code(3, 4, code);
        CHECK(rank_int(IntMatrix::from(chio_condense(a))) == rank_int(IntMatrix::from(a)) - 1);
    }
}
