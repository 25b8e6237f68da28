#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "chio/signed_graph.hpp"

using namespace chio;

namespace {

PartialTernaryMatrix rows(const std::vector<std::vector<int>>& r) { return PartialTernaryMatrix::full(r); }

// Brute force over all +-1 vertex colourings.
std::uint64_t brute_colorings(const SignedBipartiteGraph& g) {
    const int n = g.f0();
    std::uint64_t count = 0;
    for (std::uint32_t c = 0; c < (1U << n); ++c) {
        bool ok = true;
        for (const auto& e : g.edges) {
            const int a = (c >> g.row_vertex(e.i)) & 1U, b = (c >> g.col_vertex(e.j)) & 1U;
            if ((e.sign < 0) != (a == b)) ok = false;
        }
        count += ok;
    }
    return count;
}

std::uint64_t brute_balanced_signings(SignedBipartiteGraph g) {
    std::uint64_t count = 0;
    const std::size_t m = g.edges.size();
    for (std::uint32_t code = 0; code < (1U << m); ++code) {
        for (std::size_t q = 0; q < m; ++q) g.edges[q].sign = ((code >> q) & 1U) ? -1 : 1;
        count += brute_colorings(g) > 0;
    }
    return count;
}

PartialTernaryMatrix random_full(std::mt19937_64& rng, int n) {
    std::vector<std::vector<int>> r(n - 1, std::vector<int>(n - 1));
    for (auto& row : r)
        for (auto& v : row) v = static_cast<int>(rng() % 3) - 1;
    return rows(r);
}

// Every simple bipartite graph on a + b labelled vertices with at most
// max_edges edges, isolated vertices allowed.
std::vector<SmallGraph> bipartite_family(int max_vertices, int max_edges) {
    std::vector<SmallGraph> out;
    for (int a = 1; a < max_vertices; ++a)
        for (int b = 1; a + b <= max_vertices; ++b) {
            const int m = a * b;
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                if (std::popcount(mask) > max_edges) continue;
                SmallGraph g{a + b, {}};
                for (int p = 0; p < m; ++p)
                    if ((mask >> p) & 1U) g.edges.emplace_back(p / b, a + p % b);
                out.push_back(g);
            }
        }
    return out;
}

}  // namespace

TEST_CASE("graph of a condensate keeps zero entries as isolated vertices") {
    const auto g = build_graph(rows({{-1, -1, 0}, {-1, -1, 0}, {0, 0, 0}}));
    CHECK(g.f0() == 6);
    CHECK(g.f1() == 4);
    const BettiData b = betti(g);
    CHECK(b.beta0 == 3);
    CHECK(b.beta1 == 1);
    CHECK(classify_isotype(g) == IsoType::T5);
}

TEST_CASE("balance of four-circuits") {
    CHECK(is_balanced(build_graph(rows({{-1, -1}, {-1, -1}}))).balanced);
    CHECK(is_balanced(build_graph(rows({{1, 1}, {1, 1}}))).balanced);
    CHECK_FALSE(is_balanced(build_graph(rows({{1, 1}, {1, -1}}))).balanced);
    CHECK(count_colorings(build_graph(rows({{-1, -1}, {-1, -1}}))) == 2);
    CHECK(count_colorings(build_graph(rows({{1, 1}, {1, -1}}))) == 0);
    const auto col = is_balanced(build_graph(rows({{1, -1}, {-1, -1}})));
    REQUIRE_FALSE(col.balanced);
}

TEST_CASE("colourings and balanced signings match brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = build_graph(random_full(rng, 3 + static_cast<int>(trial % 2)));
        const BettiData b = betti(g);
        const std::uint64_t cols = brute_colorings(g);
        CHECK(count_colorings(g) == cols);
        CHECK(is_balanced(g).balanced == (cols > 0));
        if (cols > 0) CHECK(cols == (std::uint64_t{1} << b.beta0));
        const std::uint64_t bal = brute_balanced_signings(g);
        CHECK(count_balanced_signings(g) == bal);
        CHECK(bal == (std::uint64_t{1} << (b.f0 - b.beta0)));
    }
}

TEST_CASE("returned colouring satisfies every edge") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = build_graph(random_full(rng, 4));
        const auto r = is_balanced(g);
        if (!r.balanced) continue;
        for (const auto& e : g.edges) {
            const bool same = r.coloring[g.row_vertex(e.i)] == r.coloring[g.col_vertex(e.j)];
            CHECK(same == (e.sign < 0));
        }
    }
}

TEST_CASE("betti numbers of small graphs") {
    CHECK(cycle_graph(4).beta1() == 1);
    CHECK(complete_bipartite(2, 3).beta1() == 2);
    CHECK(complete_bipartite(3, 3).beta1() == 4);
    CHECK(disjoint_union(cycle_graph(4), SmallGraph{2, {}}).beta0() == 3);
}

TEST_CASE("fingerprints separate exactly the isomorphism classes of small bipartite graphs") {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, Fingerprint> by_canon;
    std::map<std::pair<int, Fingerprint>, std::vector<std::pair<int, int>>> by_print;
    std::size_t graphs = 0;
    for (const auto& g : bipartite_family(8, 6)) {
        ++graphs;
        const auto canon = canonical_form(g);
        const auto print = fingerprint(g);
        auto [it, fresh] = by_canon.emplace(std::make_pair(g.n, canon), print);
        if (!fresh) CHECK(it->second == print);
        auto [jt, fresh2] = by_print.emplace(std::make_pair(g.n, print), canon);
        if (!fresh2) CHECK(jt->second == canon);
    }
    CHECK(graphs > 10000);
    CHECK(by_canon.size() == by_print.size());
}

TEST_CASE("catalogue entries are pairwise non-isomorphic nonforests") {
    std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
    for (int k = 1; k <= 20; ++k) {
        const SmallGraph g = catalogue_graph(k);
        CHECK(g.beta1() >= 1);
        CHECK(classify_isotype(g) == catalogue_type(k));
        CHECK(seen.insert({g.n, canonical_form(g)}).second);
        CHECK(isotype_from_string(to_string(catalogue_type(k))) == catalogue_type(k));
    }
    CHECK(to_string(IsoType::Forest) == "forest");
    CHECK(to_string(IsoType::OtherNonforest) == "other");
    CHECK(classify_isotype(cycle_graph(6)) == IsoType::T12);
    CHECK(classify_isotype(complete_bipartite(2, 3)) == IsoType::T4);
    CHECK(classify_isotype(complete_bipartite(3, 3)) == IsoType::OtherNonforest);
    CHECK(classify_isotype(complete_bipartite(1, 3)) == IsoType::Forest);
}

TEST_CASE("matrix-circuits match brute-force subsets and the closed form") {
    const int s = 5, t = 5, cells = 16;
    for (int l = 4; l <= 8; l += 2) {
        std::uint64_t brute = 0;
        for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
            if (std::popcount(mask) != l) continue;
            std::vector<Index2> pos;
            for (int p = 0; p < cells; ++p)
                if ((mask >> p) & 1U) pos.push_back({p / 4 + 1, p % 4 + 1});
            if (is_matrix_circuit(IndexSet(s, t, pos))) ++brute;
        }
        const auto listed = enumerate_circuits(l, s, t);
        CHECK(listed.size() == brute);
        CHECK(BigInt(brute) == circuit_count_formula(l, s, t));
        for (const auto& c : listed) CHECK(is_matrix_circuit(c));
    }
    CHECK(circuit_count_formula(4, 4, 4) == 9);
    CHECK(circuit_count_formula(6, 4, 4) == 6);
    CHECK_THROWS(is_matrix_circuit(IndexSet(4, 4, {{1, 1}, {1, 2}, {2, 1}})));
}

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}
