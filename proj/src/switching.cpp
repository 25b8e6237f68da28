#include "chio/switching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chio {

SwitchElement SwitchElement::all_ones(int s, int t) {
    return {s, t, (1U << (s - 1)) - 1, (1U << (t - 1)) - 1};
}

std::uint64_t SwitchElement::group_order(int s, int t) { return std::uint64_t{1} << ((s - 1) + (t - 1)); }

SwitchElement SwitchElement::from_index(int s, int t, std::uint64_t index) {
    const std::uint32_t row_mask = (1U << (s - 1)) - 1;
    return {s, t, static_cast<std::uint32_t>(index) & row_mask, static_cast<std::uint32_t>(index >> (s - 1))};
}

SwitchElement SwitchElement::operator+(const SwitchElement& o) const {
    if (s != o.s || t != o.t) throw std::invalid_argument("switch elements from different groups");
    return {s, t, rows ^ o.rows, cols ^ o.cols};
}

namespace {

int flip(const SwitchElement& g, int i, int j) {
    return (((g.rows >> (i - 1)) ^ (g.cols >> (j - 1))) & 1U) ? -1 : 1;
}

void check_group(int s, int t, const SwitchElement& g) {
    if (g.s != s || g.t != t) throw std::invalid_argument("switch element does not match the matrix shape");
}

}  // namespace

PartialTernaryMatrix switch_matrix(const PartialTernaryMatrix& b, const SwitchElement& g) {
    check_group(b.s(), b.t(), g);
    std::vector<int> vals;
    for (std::size_t q = 0; q < b.positions().size(); ++q) {
        const Index2 p = b.positions()[q];
        vals.push_back(b.values()[q] * flip(g, p.row, p.col));
    }
    return PartialTernaryMatrix(b.domain(), vals);
}

Signing signing_of(const SignedBipartiteGraph& x) {
    Signing out;
    for (const auto& e : x.edges) out.push_back(e.sign);
    return out;
}

SignedBipartiteGraph with_signing(const SignedBipartiteGraph& x, const Signing& sigma) {
    if (sigma.size() != x.edges.size()) throw std::invalid_argument("signing length differs from edge count");
    SignedBipartiteGraph y = x;
    for (std::size_t q = 0; q < sigma.size(); ++q) {
        if (sigma[q] != 1 && sigma[q] != -1) throw std::invalid_argument("signs must be +-1");
        y.edges[q].sign = sigma[q];
    }
    y.has_signs = true;
    return y;
}

Signing switch_signing(const SignedBipartiteGraph& x, const Signing& sigma, const SwitchElement& g) {
    check_group(x.s, x.t, g);
    if (sigma.size() != x.edges.size()) throw std::invalid_argument("signing length differs from edge count");
    Signing out(sigma.size());
    for (std::size_t q = 0; q < sigma.size(); ++q) out[q] = sigma[q] * flip(g, x.edges[q].i, x.edges[q].j);
    return out;
}

std::set<Signing> orbit(const SignedBipartiteGraph& x, const Signing& sigma) {
    std::set<Signing> out;
    const std::uint64_t order = SwitchElement::group_order(x.s, x.t);
    for (std::uint64_t g = 0; g < order; ++g) out.insert(switch_signing(x, sigma, SwitchElement::from_index(x.s, x.t, g)));
    return out;
}

std::set<Signing> balanced_signings(const SignedBipartiteGraph& x) {
    std::set<Signing> out;
    const std::size_t m = x.edges.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        Signing sigma(m);
        for (std::size_t q = 0; q < m; ++q) sigma[q] = ((code >> q) & 1U) ? -1 : 1;
        if (is_balanced(with_signing(x, sigma)).balanced) out.insert(sigma);
    }
    return out;
}

namespace {

struct ParityForest {
    std::vector<int> parent, parity;
    explicit ParityForest(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v, int& par) const {
        par = 0;
        while (parent[v] != v) {
            par ^= parity[v];
            v = parent[v];
        }
        return v;
    }
};

// Colour parity demanded by an edge: (+) joins different colours.
int edge_parity(int sign) { return sign > 0 ? 1 : 0; }

}  // namespace

std::vector<int> spanning_forest(const SignedBipartiteGraph& x) {
    ParityForest f(x.f0());
    std::vector<int> tree;
    for (std::size_t q = 0; q < x.edges.size(); ++q) {
        int pa = 0, pb = 0;
        const int a = f.find(x.row_vertex(x.edges[q].i), pa), b = f.find(x.col_vertex(x.edges[q].j), pb);
        if (a != b) {
            f.parent[a] = b;
            tree.push_back(static_cast<int>(q));
        }
    }
    return tree;
}

Signing balanced_extension(const SignedBipartiteGraph& x, const std::vector<int>& tree, const Signing& tree_sign,
                           std::optional<std::vector<int>> order) {
    if (tree.size() != tree_sign.size()) throw std::invalid_argument("tree signing length differs from tree size");
    const int m = static_cast<int>(x.edges.size());
    ParityForest f(x.f0());
    Signing out(m, 0);
    std::vector<bool> in_tree(m, false);
    for (std::size_t q = 0; q < tree.size(); ++q) {
        const int e = tree[q];
        if (e < 0 || e >= m || in_tree[e]) throw std::invalid_argument("tree edge index out of range or repeated");
        if (tree_sign[q] != 1 && tree_sign[q] != -1) throw std::invalid_argument("signs must be +-1");
        in_tree[e] = true;
        int pa = 0, pb = 0;
        const int a = f.find(x.row_vertex(x.edges[e].i), pa), b = f.find(x.col_vertex(x.edges[e].j), pb);
        if (a == b) throw std::invalid_argument("tree edges contain a circuit");
        f.parent[a] = b;
        f.parity[a] = pa ^ pb ^ edge_parity(tree_sign[q]);
        out[e] = tree_sign[q];
    }
    std::vector<int> rest;
    if (order) {
        rest = *order;
    } else {
        for (int e = 0; e < m; ++e)
            if (!in_tree[e]) rest.push_back(e);
    }
    std::vector<int> sorted_rest = rest;
    std::sort(sorted_rest.begin(), sorted_rest.end());
    std::vector<int> expect;
    for (int e = 0; e < m; ++e)
        if (!in_tree[e]) expect.push_back(e);
    if (sorted_rest != expect) throw std::invalid_argument("order must list every non-tree edge once");
    for (int e : rest) {
        int pa = 0, pb = 0;
        const int a = f.find(x.row_vertex(x.edges[e].i), pa), b = f.find(x.col_vertex(x.edges[e].j), pb);
        if (a != b) throw std::invalid_argument("tree is not spanning");
        // the colours of both ends are fixed, so the sign is forced
        out[e] = (pa ^ pb) ? 1 : -1;
    }
    return out;
}

RankInvarianceReport rank_invariance_check(const PartialTernaryMatrix& b01) {
    for (auto v : b01.values())
        if (v != 0 && v != 1) throw std::invalid_argument("rank invariance needs a {0,1} pattern");
    RankInvarianceReport rep;
    rep.pattern_rank = rank_int(IntMatrix::from(b01));
    const SignedBipartiteGraph x = build_graph(b01);
    const Signing plus = signing_of(x);
    const std::set<Signing> bal = orbit(x, plus);

    auto signed_matrix = [&](const Signing& sigma) {
        std::vector<int> vals(b01.values().begin(), b01.values().end());
        std::size_t q = 0;
        for (std::size_t p = 0; p < vals.size(); ++p)
            if (vals[p] != 0) vals[p] = sigma[q++];
        return PartialTernaryMatrix(b01.domain(), vals);
    };
    for (const auto& sigma : bal) {
        ++rep.balanced;
        if (rank_int(IntMatrix::from(signed_matrix(sigma))) != rep.pattern_rank) ++rep.rank_mismatches;
    }
    const std::size_t m = x.edges.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        Signing sigma(m);
        for (std::size_t q = 0; q < m; ++q) sigma[q] = ((code >> q) & 1U) ? -1 : 1;
        if (bal.count(sigma)) continue;
        rep.max_unbalanced_rank = std::max(rep.max_unbalanced_rank, rank_int(IntMatrix::from(signed_matrix(sigma))));
    }
    return rep;
}

}  // namespace chio
