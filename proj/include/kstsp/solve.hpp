#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "kstsp/model.hpp"

namespace kstsp {

enum class Objective { Min, Max };
enum class TourSide { Pickup, Delivery };

/// Thrown when an exhaustive routine would exceed its configured budget.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact single-matrix TSP over subsets, best or worst tour. Deterministic
/// tie-break: states are scanned by ascending (subset, last city), strict
/// improvements only.
TourCost held_karp(const DistanceMatrix& d, Objective obj = Objective::Min, int cap = 16);

/// Scans every (t1, t2) permutation pair, keeps the best/worst whose
/// conflict graph is k-colorable, and synthesizes the stacks afterwards.
/// (n!)^2 pairs; refuses n > cap.
Solution exact_oracle_pairs(const Instance& inst, Objective obj = Objective::Min, int cap = 7);

/// Enumerates every ordered placement of the n items into k stacks
/// (k*(k+1)*...*(k+n-1) arrangements) and runs both tour DPs on each.
/// Refuses when the arrangement count exceeds the cap.
Solution exact_oracle_stacks(const Instance& inst, std::int64_t arrangement_cap = 1'000'000);

/// Best full solution with t1 fixed: all k^n stack assignments (within-stack
/// order follows t1, which settles the pickup side), delivery side solved
/// exactly for each. Refuses k^n > assignment_cap.
Solution best_given_pickup(const Instance& inst, const Tour& t1,
                           std::int64_t assignment_cap = std::int64_t(1) << 20);

/// Mirror image: t2 fixed, within-stack order follows reversed t2, pickup
/// side solved exactly.
Solution best_given_delivery(const Instance& inst, const Tour& t2,
                             std::int64_t assignment_cap = std::int64_t(1) << 20);

/// Two-step heuristic: fix one side's tour at its TSP optimum (or at the
/// given tour) and complete the other side exactly.
Solution tws(const Instance& inst, TourSide side = TourSide::Pickup,
             const std::optional<Tour>& fixed_tour = std::nullopt,
             int hk_cap = 16, std::int64_t assignment_cap = std::int64_t(1) << 20);

/// Convex weight for the aggregate distance, alpha = num/den in (0,1).
struct Alpha {
    std::int64_t num = 1;
    std::int64_t den = 2;
};

/// scale * 2 * (alpha*d1(a,b) + (1-alpha)*d2(b,a)). The d2 argument order is
/// flipped because the companion tour is driven backwards. Throws
/// std::invalid_argument when an entry is not integral (pick a scale that
/// clears the denominator). At alpha=1/2 this is d1(a,b)+d2(b,a), always
/// integral.
DistanceMatrix aggregate_distance(const Instance& inst, Alpha alpha = {}, Cost scale = 1);

/// One-step heuristic: solve the TSP under the aggregate distance, deliver
/// along the reverse of the pickup tour, store everything in one stack.
/// Always feasible.
Solution twd(const Instance& inst, Alpha alpha = {}, Cost scale = 1, int hk_cap = 16);

struct BoundsReport {
    Cost opt_tsp1 = 0;
    Cost opt_tsp2 = 0;
    Cost wor_tsp1 = 0;
    Cost wor_tsp2 = 0;
    Cost opt_kstsp = 0;
    Cost wor_kstsp = 0;
    bool chain_ok = false;
};

/// Exact bound chain on one instance:
///   opt_tsp1 + opt_tsp2 <= opt_kstsp
///   opt_kstsp <= min(opt_tsp1 + wor_tsp2, wor_tsp1 + opt_tsp2) <= wor_kstsp
///   wor_kstsp <= wor_tsp1 + wor_tsp2
/// chain_ok reports whether all of it holds.
BoundsReport bounds_report(const Instance& inst, int pair_cap = 7, int hk_cap = 16);

}  // namespace kstsp
