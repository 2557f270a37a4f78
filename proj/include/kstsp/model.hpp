#pragma once

#include <cstdint>
#include <vector>

namespace kstsp {

using Cost = std::int64_t;
using DistanceMatrix = std::vector<std::vector<Cost>>;

/// One pickup-and-delivery instance. City 1 holds the pickup tour, city 2 the
/// delivery tour; index 0 is the depot of both cities, 1..n are the items.
/// Matrices are dense (n+1)x(n+1), nonnegative, possibly asymmetric; the
/// diagonal is never read.
struct Instance {
    int n = 0;
    int k = 1;
    DistanceMatrix d1;
    DistanceMatrix d2;
};

/// Visiting order of the n items. The depot sits implicitly at both ends, so
/// a tour (a,b,c) costs d(0,a)+d(a,b)+d(b,c)+d(c,0).
struct Tour {
    std::vector<int> seq;
};

/// Partition of the items into ordered stacks, each listed bottom to top.
/// Stacks may be empty; items are pushed in pickup order and popped from the
/// top in delivery order.
struct StackingOrder {
    std::vector<std::vector<int>> stacks;
};

struct Solution {
    Tour t1;
    Tour t2;
    StackingOrder stacking;
    Cost value = 0;
};

struct TourCost {
    Tour tour;
    Cost cost = 0;
};

/// Closed-tour cost including both depot arcs. Throws std::invalid_argument
/// when the tour length does not match the matrix side.
Cost tour_cost(const Tour& tour, const DistanceMatrix& d);

/// Order-based feasibility of (t1, t2, p): within every stack, pickup
/// positions must strictly increase bottom to top and delivery positions
/// strictly decrease. Adjacent slots suffice by transitivity.
/// Throws std::invalid_argument on an item-set mismatch between the three.
bool check_triple_feasible(const Tour& t1, const Tour& t2, const StackingOrder& p);

/// Replay oracle for the same question: pushes t1 into the stacks (an item
/// must land exactly on its stack's next free slot) and pops t2 from the
/// tops, failing on the first violation. Agrees with check_triple_feasible
/// on every input; kept as an independent code path.
bool simulate_triple(const Tour& t1, const Tour& t2, const StackingOrder& p);

bool is_permutation_tour(const Tour& t, int n);

/// Throws std::invalid_argument unless n >= 1, k >= 1, both matrices are
/// (n+1)x(n+1) and every entry is nonnegative.
void validate_instance(const Instance& inst);

Tour canonical_tour(int n);            // (1, 2, ..., n)
Tour reversed_tour(const Tour& t);

}  // namespace kstsp
