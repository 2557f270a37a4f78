#pragma once

#include <optional>
#include <utility>

#include "kstsp/model.hpp"

namespace kstsp {

/// Conflict graph of a tour pair. Two items conflict when both tours visit
/// them in the same relative order; such a pair can never share a stack.
/// Only items with at least one conflict appear as vertices. Ranks are
/// 0-based positions in t1 and t2, indexed by item id (slot 0 unused).
struct ConflictGraph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // a < b, lexicographically sorted
    std::vector<int> pickup_rank;
    std::vector<int> delivery_rank;
};

/// color[v] in 1..chi for vertices, 0 for items outside the graph.
/// chi is 0 when the graph has no vertices.
struct Coloring {
    int chi = 0;
    std::vector<int> color;
};

ConflictGraph build_conflict_graph(const Tour& t1, const Tour& t2);

/// Chain-rank coloring: color(v) = length of the longest sequence of
/// pairwise-conflicting items ending at v when items are ordered by pickup
/// position. Any two vertices ascending in both ranks conflict, so equal
/// colors are never adjacent and chi equals the largest clique: the coloring
/// is minimum, not just proper.
Coloring min_coloring(const ConflictGraph& g);

/// Longest common subsequence of the two visiting orders. Independent
/// cross-check: it equals min_coloring(...).chi whenever the LCS is >= 2,
/// and chi is 0 whenever the LCS is <= 1.
int lcs_length(const Tour& t1, const Tour& t2);

/// Colors the conflict graph, then stacks every item in pickup order into
/// the stack named by its color; conflict-free items join stack 1. Returns
/// nullopt when more than k colors are needed (no compatible stacking
/// exists). The returned triple always passes check_triple_feasible.
std::optional<StackingOrder> stacking_from_tours(const Tour& t1, const Tour& t2, int k);

}  // namespace kstsp
