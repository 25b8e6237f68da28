#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chio {

// Unlabelled-by-intent simple graph on vertices 0..n-1.
struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int f0() const { return n; }
    int f1() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    // Component id per vertex, ids numbered in order of first vertex.
    std::vector<int> components(int* count = nullptr) const;
    int beta0() const;
    int beta1() const { return f1() - f0() + beta0(); }
};

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
SmallGraph cycle_graph(int len);
SmallGraph complete_bipartite(int a, int b);

// Isomorphism invariant: sorted list of per-component
// (f0, f1, sorted degrees, sorted degree pairs over edges).
using Fingerprint = std::vector<std::vector<int>>;
Fingerprint fingerprint(const SmallGraph& g);

// Complete invariant by exhaustive relabelling. Vertices are ordered by degree
// and every permutation inside a degree class is tried; the least sorted edge
// list wins. Exponential, meant for graphs with at most about 10 vertices.
std::vector<std::pair<int, int>> canonical_form(const SmallGraph& g);

}  // namespace chio
