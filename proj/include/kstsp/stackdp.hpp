#pragma once

#include "kstsp/model.hpp"

namespace kstsp {

/// Cheapest tour that visits every stack bottom-up, by a label DP over the
/// vector of per-stack progress counters (state e: e[l] items of stack l
/// already picked). O((n+1)^k * k^2) time. Ties prefer the smallest stack
/// index, so the result is deterministic.
TourCost optimal_pickup_tour(const StackingOrder& p, const DistanceMatrix& d1);

/// Cheapest tour that empties every stack top-down: the same DP run on the
/// reversed stacks with the delivery matrix.
TourCost optimal_delivery_tour(const StackingOrder& p, const DistanceMatrix& d2);

/// Once the stacks are fixed the two sides are independent; runs both DPs
/// and assembles the solution. Throws std::invalid_argument when p uses more
/// than inst.k nonempty stacks or does not partition 1..n.
Solution optimal_tours_given_stacks(const Instance& inst, const StackingOrder& p);

}  // namespace kstsp
