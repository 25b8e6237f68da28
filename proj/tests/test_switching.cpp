#include "doctest.h"

#include "chio/switching.hpp"

using namespace chio;

namespace {

PartialTernaryMatrix rows(const std::vector<std::vector<int>>& r) { return PartialTernaryMatrix::full(r); }

}  // namespace

TEST_CASE("identity and the all-ones element fix every matrix") {
    const auto b = rows({{1, -1, 0}, {0, 1, 1}, {-1, 0, 1}});
    CHECK(switch_matrix(b, SwitchElement::identity(4, 4)) == b);
    CHECK(switch_matrix(b, SwitchElement::all_ones(4, 4)) == b);
    CHECK_FALSE(switch_matrix(b, SwitchElement{4, 4, 1, 0}) == b);
}

TEST_CASE("flipping row 1 of the all-minus four-circuit") {
    const auto b = rows({{-1, -1}, {-1, -1}});
    const auto g = switch_matrix(b, SwitchElement{3, 3, 1, 0});
    CHECK(g == rows({{1, 1}, {-1, -1}}));
}

TEST_CASE("group law and kernel on 3x3 grids") {
    const auto b = rows({{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}});
    const auto order = SwitchElement::group_order(4, 4);
    CHECK(order == 64);
    int kernel = 0;
    for (std::uint64_t gi = 0; gi < order; ++gi) {
        const auto g = SwitchElement::from_index(4, 4, gi);
        kernel += switch_matrix(b, g) == b;
        for (std::uint64_t hi = 0; hi < order; ++hi) {
            const auto h = SwitchElement::from_index(4, 4, hi);
            CHECK(switch_matrix(switch_matrix(b, g), h) == switch_matrix(b, g + h));
        }
    }
    CHECK(kernel == 2);
}

TEST_CASE("orbits of four-circuit signings") {
    const auto x = build_graph(rows({{-1, -1}, {-1, -1}}));
    const auto orb = orbit(x, signing_of(x));
    CHECK(orb.size() == 8);
    CHECK(orb == balanced_signings(x));
    const auto bad = orbit(x, Signing{1, 1, 1, -1});
    CHECK(bad.size() == 8);
    for (const auto& s : bad) CHECK(balanced_signings(x).count(s) == 0);
}

TEST_CASE("a single edge reaches both signs") {
    const auto x = build_graph(rows({{1}}));
    CHECK(orbit(x, {1}).size() == 2);
    CHECK(orbit(x, {-1}).size() == 2);
}

TEST_CASE("balanced extension of a path in the four-circuit") {
    const auto x = build_graph(rows({{-1, -1}, {-1, -1}}));
    // edges in order (1,1),(1,2),(2,1),(2,2); tree without (2,2)
    const Signing ext = balanced_extension(x, {0, 1, 2}, {-1, -1, -1});
    CHECK(ext == Signing{-1, -1, -1, -1});
    const Signing ext2 = balanced_extension(x, {0, 1, 2}, {1, -1, -1});
    CHECK(ext2[3] == 1);
    CHECK_THROWS(balanced_extension(x, {0, 1}, {1, 1}));
    CHECK_THROWS(balanced_extension(x, {0, 1, 2, 3}, {1, 1, 1, 1}));
    CHECK_THROWS(balanced_extension(x, {0, 1, 2}, {1, 1}));
}

TEST_CASE("every tree signing of K23 extends to a balanced signing") {
    const auto x = build_graph(rows({{1, 1, 1}, {1, 1, 1}}));
    const auto tree = spanning_forest(x);
    CHECK(tree.size() == 4);
    std::set<Signing> built;
    for (std::uint32_t code = 0; code < 16; ++code) {
        Signing ts(4);
        for (int q = 0; q < 4; ++q) ts[q] = ((code >> q) & 1U) ? -1 : 1;
        const Signing ext = balanced_extension(x, tree, ts);
        CHECK(is_balanced(with_signing(x, ext)).balanced);
        built.insert(ext);
    }
    CHECK(built == balanced_signings(x));
    CHECK(built.size() == 16);
}

TEST_CASE("rank invariance examples") {
    const auto ones2 = rank_invariance_check(rows({{1, 1}, {1, 1}}));
    CHECK(ones2.balanced == 8);
    CHECK(ones2.pattern_rank == 1);
    CHECK(ones2.ok());
    const auto id3 = rank_invariance_check(rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id3.pattern_rank == 3);
    CHECK(id3.ok());
    CHECK(id3.max_unbalanced_rank == -1);
    const auto ones3 = rank_invariance_check(rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    CHECK(ones3.pattern_rank == 1);
    CHECK(ones3.ok());
    CHECK(ones3.max_unbalanced_rank > 1);
    CHECK_THROWS(rank_invariance_check(rows({{1, -1}, {1, 1}})));
}

TEST_CASE("switching commutes with building the graph") {
    const auto b = rows({{1, 0, -1}, {-1, 1, 0}, {1, 1, 1}});
    const auto x = build_graph(b);
    for (std::uint64_t gi = 0; gi < SwitchElement::group_order(4, 4); ++gi) {
        const auto g = SwitchElement::from_index(4, 4, gi);
        const auto y = build_graph(switch_matrix(b, g));
        CHECK(signing_of(y) == switch_signing(x, signing_of(x), g));
        CHECK(is_balanced(y).balanced == is_balanced(x).balanced);
    }
}
