#include "chio/small_graph.hpp"

#include <algorithm>
#include <numeric>

namespace chio {

std::vector<int> SmallGraph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<int> SmallGraph::components(int* count) const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    std::vector<int> id(n, -1), root_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (root_id[r] < 0) root_id[r] = next++;
        id[v] = root_id[r];
    }
    if (count) *count = next;
    return id;
}

int SmallGraph::beta0() const {
    int c = 0;
    components(&c);
    return c;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    SmallGraph g{a.n + b.n, a.edges};
    for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.n, v + a.n);
    return g;
}

SmallGraph cycle_graph(int len) {
    SmallGraph g{len, {}};
    for (int v = 0; v < len; ++v) g.edges.emplace_back(v, (v + 1) % len);
    return g;
}

SmallGraph complete_bipartite(int a, int b) {
    SmallGraph g{a + b, {}};
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.edges.emplace_back(u, a + v);
    return g;
}

Fingerprint fingerprint(const SmallGraph& g) {
    int ncomp = 0;
    const auto comp = g.components(&ncomp);
    const auto deg = g.degrees();
    std::vector<std::vector<int>> degs(ncomp), pairs(ncomp);
    std::vector<int> nv(ncomp, 0), ne(ncomp, 0);
    for (int v = 0; v < g.n; ++v) {
        ++nv[comp[v]];
        degs[comp[v]].push_back(deg[v]);
    }
    for (auto [u, v] : g.edges) {
        int c = comp[u];
        ++ne[c];
        int a = std::min(deg[u], deg[v]), b = std::max(deg[u], deg[v]);
        pairs[c].push_back(a * 64 + b);
    }
    Fingerprint fp;
    for (int c = 0; c < ncomp; ++c) {
        std::sort(degs[c].begin(), degs[c].end());
        std::sort(pairs[c].begin(), pairs[c].end());
        std::vector<int> rec{nv[c], ne[c]};
        rec.insert(rec.end(), degs[c].begin(), degs[c].end());
        rec.push_back(-1);
        rec.insert(rec.end(), pairs[c].begin(), pairs[c].end());
        fp.push_back(std::move(rec));
    }
    std::sort(fp.begin(), fp.end());
    return fp;
}

std::vector<std::pair<int, int>> canonical_form(const SmallGraph& g) {
    const auto deg = g.degrees();
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });

    // Class boundaries inside `order`.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < g.n;) {
        int j = i;
        while (j < g.n && deg[order[j]] == deg[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::vector<std::pair<int, int>> best;
    bool have = false;
    std::vector<int> label(g.n);
    auto evaluate = [&]() {
        for (int pos = 0; pos < g.n; ++pos) label[order[pos]] = pos;
        std::vector<std::pair<int, int>> e;
        e.reserve(g.edges.size());
        for (auto [u, v] : g.edges) e.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
        std::sort(e.begin(), e.end());
        if (!have || e < best) {
            best = std::move(e);
            have = true;
        }
    };
    // Odometer over the permutations of every class; isolated vertices are
    // interchangeable and left alone.
    for (auto& [lo, hi] : classes) std::sort(order.begin() + lo, order.begin() + hi);
    while (true) {
        evaluate();
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [lo, hi] = classes[c];
            if (deg[order[lo]] == 0) continue;
            if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
        }
        if (c == classes.size()) break;
    }
    return best;
}

}  // namespace chio
