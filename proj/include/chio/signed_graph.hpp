#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chio/matrix_core.hpp"
#include "chio/small_graph.hpp"

namespace chio {

// Edge {(i,t),(s,j)}; sign is 0 when the graph is unsigned.
struct SignedEdge {
    int i = 1;
    int j = 1;
    int sign = 0;
    bool operator==(const SignedEdge&) const = default;
};

// Labelled bipartite graph X_B. Row vertex (i,t) for each i in rows, column
// vertex (s,j) for each j in cols. Vertex ids: rows first, then columns, both
// ascending, which is the lexicographic order of the labels.
struct SignedBipartiteGraph {
    int s = 2;
    int t = 2;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<SignedEdge> edges;  // sorted by (i,j)
    bool has_signs = true;

    int f0() const { return static_cast<int>(rows.size() + cols.size()); }
    int f1() const { return static_cast<int>(edges.size()); }
    int row_vertex(int i) const;
    int col_vertex(int j) const;
    SmallGraph underlying() const;
};

SignedBipartiteGraph build_graph(const PartialTernaryMatrix& b);
// Unsigned graph on the given vertex labels with one edge per member of e.
SignedBipartiteGraph bipartite_graph(int s, int t, std::vector<int> rows, std::vector<int> cols, const IndexSet& e);

struct BettiData {
    int f0 = 0;
    int f1 = 0;
    int beta0 = 0;
    int beta1 = 0;
    bool operator==(const BettiData&) const = default;
};

BettiData betti(const SignedBipartiteGraph& g);

struct BalanceResult {
    bool balanced = false;
    std::vector<int> coloring;  // by vertex id, values +-1; empty when unbalanced
};

// Iterative DFS 2-colouring: a (-)-edge forces equal colours, a (+)-edge
// forces different colours.
BalanceResult is_balanced(const SignedBipartiteGraph& g);

std::uint64_t count_colorings(const SignedBipartiteGraph& g);
std::uint64_t count_balanced_signings(const SignedBipartiteGraph& g);

enum class IsoType : int {
    Forest = 0,
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10,
    T11, T12, T13, T14, T15, T16, T17, T18, T19, T20,
    OtherNonforest
};
constexpr int kIsoTypeCount = 22;

std::string to_string(IsoType t);
IsoType isotype_from_string(const std::string& s);
inline IsoType catalogue_type(int k) { return static_cast<IsoType>(k); }  // k in 1..20
inline int catalogue_index(IsoType t) { return static_cast<int>(t); }

// Representative graph of catalogue entry t1..t20.
SmallGraph catalogue_graph(int k);

IsoType classify_isotype(const SmallGraph& g);
IsoType classify_isotype(const SignedBipartiteGraph& g);

bool is_matrix_circuit(const IndexSet& l);
void for_each_circuit(int l, int s, int t, const std::function<void(const IndexSet&)>& fn);
std::vector<IndexSet> enumerate_circuits(int l, int s, int t);
// C(s-1,j) C(t-1,j) j!(j-1)!/2 with l = 2j.
BigInt circuit_count_formula(int l, int s, int t);

BigInt binomial(long long n, long long k);

}  // namespace chio
