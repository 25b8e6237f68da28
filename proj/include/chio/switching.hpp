#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "chio/matrix_core.hpp"
#include "chio/signed_graph.hpp"

namespace chio {

// Element of (Z/2)^{s-1} + (Z/2)^{t-1}. Bit i-1 of rows flips row i, bit j-1
// of cols flips column j.
struct SwitchElement {
    int s = 2;
    int t = 2;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;

    static SwitchElement identity(int s, int t) { return {s, t, 0, 0}; }
    static SwitchElement all_ones(int s, int t);
    static SwitchElement from_index(int s, int t, std::uint64_t index);  // rows in the low bits
    static std::uint64_t group_order(int s, int t);

    SwitchElement operator+(const SwitchElement& o) const;
    bool operator==(const SwitchElement&) const = default;
};

PartialTernaryMatrix switch_matrix(const PartialTernaryMatrix& b, const SwitchElement& g);

// Signing of a fixed graph, one sign per edge in the graph's edge order.
using Signing = std::vector<int>;

Signing signing_of(const SignedBipartiteGraph& x);
SignedBipartiteGraph with_signing(const SignedBipartiteGraph& x, const Signing& sigma);
Signing switch_signing(const SignedBipartiteGraph& x, const Signing& sigma, const SwitchElement& g);
std::set<Signing> orbit(const SignedBipartiteGraph& x, const Signing& sigma);
std::set<Signing> balanced_signings(const SignedBipartiteGraph& x);  // brute force over all signings

// Unique balanced signing of x that agrees with tree_sign on the edges listed
// in tree (indices into x.edges). Non-tree edges are processed in the given
// order, lexicographic by default. Throws unless tree is a spanning forest.
Signing balanced_extension(const SignedBipartiteGraph& x, const std::vector<int>& tree, const Signing& tree_sign,
                           std::optional<std::vector<int>> order = std::nullopt);

// A spanning forest of x: edges kept greedily in edge order.
std::vector<int> spanning_forest(const SignedBipartiteGraph& x);

struct RankInvarianceReport {
    int pattern_rank = 0;
    std::uint64_t balanced = 0;        // balanced signings examined
    std::uint64_t rank_mismatches = 0;  // balanced signings with a different rank
    int max_unbalanced_rank = -1;       // -1 when every signing is balanced
    bool ok() const { return rank_mismatches == 0; }
};

// b01 is a {0,1} pattern on [s-1]x[t-1].
RankInvarianceReport rank_invariance_check(const PartialTernaryMatrix& b01);

}  // namespace chio
