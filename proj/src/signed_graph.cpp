#include "chio/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chio {

int SignedBipartiteGraph::row_vertex(int i) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), i);
    if (it == rows.end() || *it != i) throw std::out_of_range("no row vertex " + std::to_string(i));
    return static_cast<int>(it - rows.begin());
}

int SignedBipartiteGraph::col_vertex(int j) const {
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) throw std::out_of_range("no column vertex " + std::to_string(j));
    return static_cast<int>(rows.size() + (it - cols.begin()));
}

SmallGraph SignedBipartiteGraph::underlying() const {
    SmallGraph g{f0(), {}};
    for (const auto& e : edges) g.edges.emplace_back(row_vertex(e.i), col_vertex(e.j));
    return g;
}

SignedBipartiteGraph build_graph(const PartialTernaryMatrix& b) {
    SignedBipartiteGraph g;
    g.s = b.s();
    g.t = b.t();
    g.rows = b.domain().p1();
    g.cols = b.domain().p2();
    for (std::size_t k = 0; k < b.values().size(); ++k) {
        if (b.values()[k] == 0) continue;
        const auto& p = b.positions()[k];
        g.edges.push_back({p.row, p.col, b.values()[k]});
    }
    return g;
}

SignedBipartiteGraph bipartite_graph(int s, int t, std::vector<int> rows, std::vector<int> cols, const IndexSet& e) {
    SignedBipartiteGraph g;
    g.s = s;
    g.t = t;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    g.rows = std::move(rows);
    g.cols = std::move(cols);
    g.has_signs = false;
    for (const auto& p : e.members()) {
        g.row_vertex(p.row);
        g.col_vertex(p.col);
        g.edges.push_back({p.row, p.col, 0});
    }
    return g;
}

BettiData betti(const SignedBipartiteGraph& g) {
    const SmallGraph u = g.underlying();
    BettiData d;
    d.f0 = u.f0();
    d.f1 = u.f1();
    d.beta0 = u.beta0();
    d.beta1 = d.f1 - d.f0 + d.beta0;
    return d;
}

BalanceResult is_balanced(const SignedBipartiteGraph& g) {
    if (!g.has_signs) throw std::invalid_argument("balance needs a signed graph");
    const int n = g.f0();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const auto& e : g.edges) {
        int u = g.row_vertex(e.i), v = g.col_vertex(e.j);
        adj[u].emplace_back(v, e.sign);
        adj[v].emplace_back(u, e.sign);
    }
    BalanceResult res;
    std::vector<int> colour(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (colour[root] != 0) continue;
        colour[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, sign] : adj[u]) {
                int want = sign < 0 ? colour[u] : -colour[u];
                if (colour[w] == 0) {
                    colour[w] = want;
                    stack.push_back(w);
                } else if (colour[w] != want) {
                    return res;
                }
            }
        }
    }
    res.balanced = true;
    res.coloring = std::move(colour);
    return res;
}

std::uint64_t count_colorings(const SignedBipartiteGraph& g) {
    if (!is_balanced(g).balanced) return 0;
    return std::uint64_t{1} << betti(g).beta0;
}

std::uint64_t count_balanced_signings(const SignedBipartiteGraph& g) {
    const auto d = betti(g);
    return std::uint64_t{1} << (d.f0 - d.beta0);
}

std::string to_string(IsoType t) {
    if (t == IsoType::Forest) return "forest";
    if (t == IsoType::OtherNonforest) return "other";
    return "t" + std::to_string(static_cast<int>(t));
}

IsoType isotype_from_string(const std::string& s) {
    if (s == "forest") return IsoType::Forest;
    if (s == "other") return IsoType::OtherNonforest;
    if (s.size() >= 2 && s[0] == 't') {
        int k = std::stoi(s.substr(1));
        if (k >= 1 && k <= 20) return catalogue_type(k);
    }
    throw std::invalid_argument("unknown isotype '" + s + "'");
}

namespace {

SmallGraph c4_plus(int extra_vertices, std::vector<std::pair<int, int>> extra_edges) {
    SmallGraph g = cycle_graph(4);
    g.n += extra_vertices;
    for (auto e : extra_edges) g.edges.push_back(e);
    return g;
}

std::map<Fingerprint, IsoType> build_catalogue_index() {
    std::map<Fingerprint, IsoType> idx;
    for (int k = 1; k <= 20; ++k) {
        auto [it, fresh] = idx.emplace(fingerprint(catalogue_graph(k)), catalogue_type(k));
        if (!fresh) throw std::logic_error("catalogue fingerprints collide");
    }
    return idx;
}

}  // namespace

SmallGraph catalogue_graph(int k) {
    switch (k) {
        case 1: return cycle_graph(4);
        case 2: return c4_plus(1, {});
        case 3: return c4_plus(1, {{0, 4}});
        case 4: return complete_bipartite(2, 3);
        case 5: return c4_plus(2, {});
        case 6: return c4_plus(2, {{0, 4}});
        case 7: return c4_plus(2, {{4, 5}});
        case 8: return c4_plus(2, {{0, 4}, {2, 5}});
        case 9: return c4_plus(2, {{0, 4}, {1, 5}});
        case 10: return c4_plus(2, {{0, 4}, {4, 5}});
        case 11: return c4_plus(2, {{0, 4}, {0, 5}});
        case 12: return cycle_graph(6);
        case 13: return c4_plus(3, {});
        case 14: return c4_plus(3, {{0, 4}});
        case 15: return c4_plus(3, {{4, 5}});
        case 16: return c4_plus(3, {{0, 4}, {5, 6}});
        case 17: return c4_plus(3, {{4, 5}, {5, 6}});
        case 18: return c4_plus(4, {});
        case 19: return c4_plus(4, {{4, 5}});
        case 20: return c4_plus(4, {{4, 5}, {6, 7}});
        default: throw std::out_of_range("catalogue index must be 1..20");
    }
}

IsoType classify_isotype(const SmallGraph& g) {
    if (g.beta1() == 0) return IsoType::Forest;
    static const std::map<Fingerprint, IsoType> index = build_catalogue_index();
    auto it = index.find(fingerprint(g));
    return it == index.end() ? IsoType::OtherNonforest : it->second;
}

IsoType classify_isotype(const SignedBipartiteGraph& g) { return classify_isotype(g.underlying()); }

bool is_matrix_circuit(const IndexSet& l) {
    if (l.size() % 2 != 0) throw std::invalid_argument("matrix circuit candidates have even cardinality");
    if (l.size() < 4) return false;
    auto g = bipartite_graph(l.s(), l.t(), l.p1(), l.p2(), l).underlying();
    if (g.f0() != g.f1() || g.beta0() != 1) return false;
    auto d = g.degrees();
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    if (k > n) return;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i + 1) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

void for_each_circuit(int l, int s, int t, const std::function<void(const IndexSet&)>& fn) {
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("circuit length must be even and at least 4");
    const int j = l / 2;
    for_each_subset(s - 1, j, [&](const std::vector<int>& rs) {
        for_each_subset(t - 1, j, [&](const std::vector<int>& cs) {
            // Walk r[0] c[p0] r[q1] c[p1] ... r[q_{j-1}] c[p_{j-1}] back to r[0].
            std::set<std::vector<Index2>> seen;
            std::vector<int> q(rs.begin() + 1, rs.end());
            do {
                std::vector<int> p(cs);
                do {
                    std::vector<Index2> e;
                    std::vector<int> order{rs[0]};
                    order.insert(order.end(), q.begin(), q.end());
                    for (int k = 0; k < j; ++k) {
                        e.push_back({order[k], p[k]});
                        e.push_back({order[(k + 1) % j], p[k]});
                    }
                    std::sort(e.begin(), e.end());
                    seen.insert(e);
                } while (std::next_permutation(p.begin(), p.end()));
            } while (std::next_permutation(q.begin(), q.end()));
            for (const auto& e : seen) fn(IndexSet(s, t, e));
        });
    });
}

std::vector<IndexSet> enumerate_circuits(int l, int s, int t) {
    std::vector<IndexSet> out;
    for_each_circuit(l, s, t, [&](const IndexSet& c) { out.push_back(c); });
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt circuit_count_formula(int l, int s, int t) {
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("circuit length must be even and at least 4");
    const int j = l / 2;
    BigInt fj = 1, fj1 = 1;
    for (int i = 2; i <= j; ++i) fj *= i;
    for (int i = 2; i <= j - 1; ++i) fj1 *= i;
    return binomial(s - 1, j) * binomial(t - 1, j) * fj * fj1 / 2;
}

}  // namespace chio
