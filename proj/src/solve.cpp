#include "kstsp/solve.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kstsp/compat.hpp"
#include "kstsp/stackdp.hpp"

namespace kstsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();

struct PairScanResult {
    Tour min_t1, min_t2;
    Cost min_value = kInf;
    Tour max_t1, max_t2;
    Cost max_value = -1;
};

// One pass over all (t1, t2) permutation pairs, tracking the cheapest and the
// most expensive pair whose conflict graph fits into k stacks. Permutations
// run in lexicographic order and only strict improvements are kept, so both
// extremes are deterministic. A feasible pair always exists: the reverse of
// any tour is conflict-free with it.
PairScanResult scan_tour_pairs(const Instance& inst, int cap) {
    validate_instance(inst);
    if (inst.n > cap)
        throw CapExceeded("pair oracle: n=" + std::to_string(inst.n) +
                          " exceeds cap " + std::to_string(cap));
    PairScanResult out;
    Tour t1 = canonical_tour(inst.n);
    do {
        const Cost c1 = tour_cost(t1, inst.d1);
        Tour t2 = canonical_tour(inst.n);
        do {
            const Coloring col = min_coloring(build_conflict_graph(t1, t2));
            if (col.chi <= inst.k) {
                const Cost value = c1 + tour_cost(t2, inst.d2);
                if (value < out.min_value) {
                    out.min_value = value;
                    out.min_t1 = t1;
                    out.min_t2 = t2;
                }
                if (value > out.max_value) {
                    out.max_value = value;
                    out.max_t1 = t1;
                    out.max_t2 = t2;
                }
            }
        } while (std::next_permutation(t2.seq.begin(), t2.seq.end()));
    } while (std::next_permutation(t1.seq.begin(), t1.seq.end()));
    return out;
}

Solution assemble_from_pair(const Instance& inst, const Tour& t1, const Tour& t2, Cost value) {
    auto stacks = stacking_from_tours(t1, t2, inst.k);
    // chi <= k was already established by the scan.
    return {t1, t2, std::move(*stacks), value};
}

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t cap, const char* who) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap)
            throw CapExceeded(std::string(who) + ": enumeration size exceeds cap " +
                              std::to_string(cap));
    }
    return r;
}

}  // namespace

TourCost held_karp(const DistanceMatrix& d, Objective obj, int cap) {
    const int n = static_cast<int>(d.size()) - 1;
    if (n < 1) throw std::invalid_argument("held_karp: matrix side must be at least 2");
    if (n > cap)
        throw CapExceeded("held_karp: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));

    const bool maximize = obj == Objective::Max;
    const std::size_t full = std::size_t(1) << n;
    // dp[mask*n + j]: best depot-started path covering the items in mask and
    // ending at item j+1. kInf doubles as "unreached" in both objectives.
    std::vector<Cost> dp(full * n, kInf);
    std::vector<std::int16_t> parent(full * n, -1);
    for (int j = 0; j < n; ++j) dp[(std::size_t(1) << j) * n + j] = d[0][j + 1];

    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            const Cost base = dp[mask * n + j];
            if (base == kInf) continue;
            for (int t = 0; t < n; ++t) {
                if (mask >> t & 1) continue;
                const Cost cand = base + d[j + 1][t + 1];
                Cost& slot = dp[(mask | std::size_t(1) << t) * n + t];
                const bool better =
                    slot == kInf || (maximize ? cand > slot : cand < slot);
                if (better) {
                    slot = cand;
                    parent[(mask | std::size_t(1) << t) * n + t] =
                        static_cast<std::int16_t>(j);
                }
            }
        }
    }

    Cost best = kInf;
    int best_j = -1;
    for (int j = 0; j < n; ++j) {
        const Cost base = dp[(full - 1) * n + j];
        if (base == kInf) continue;
        const Cost cand = base + d[j + 1][0];
        const bool better = best == kInf || (maximize ? cand > best : cand < best);
        if (better) {
            best = cand;
            best_j = j;
        }
    }

    Tour tour;
    tour.seq.resize(n);
    std::size_t mask = full - 1;
    for (int pos = n - 1, j = best_j; pos >= 0; --pos) {
        tour.seq[pos] = j + 1;
        const int prev = parent[mask * n + j];
        mask ^= std::size_t(1) << j;
        j = prev;
    }
    return {tour, best};
}

Solution exact_oracle_pairs(const Instance& inst, Objective obj, int cap) {
    const PairScanResult scan = scan_tour_pairs(inst, cap);
    if (obj == Objective::Min)
        return assemble_from_pair(inst, scan.min_t1, scan.min_t2, scan.min_value);
    return assemble_from_pair(inst, scan.max_t1, scan.max_t2, scan.max_value);
}

Solution exact_oracle_stacks(const Instance& inst, std::int64_t arrangement_cap) {
    validate_instance(inst);
    std::int64_t arrangements = 1;
    for (int i = 0; i < inst.n; ++i) {
        arrangements *= inst.k + i;
        if (arrangements > arrangement_cap)
            throw CapExceeded("stack oracle: " + std::to_string(inst.n) + " items into " +
                              std::to_string(inst.k) + " stacks exceeds cap " +
                              std::to_string(arrangement_cap));
    }

    Solution best;
    best.value = kInf;
    StackingOrder p;
    p.stacks.assign(inst.k, {});
    // Items enter in id order; item i may slot anywhere in any stack, which
    // visits each ordered placement exactly once.
    auto place = [&](auto&& self, int item) -> void {
        if (item > inst.n) {
            const Solution cand = optimal_tours_given_stacks(inst, p);
            if (cand.value < best.value) best = cand;
            return;
        }
        for (auto& stack : p.stacks) {
            for (std::size_t pos = 0; pos <= stack.size(); ++pos) {
                stack.insert(stack.begin() + pos, item);
                self(self, item + 1);
                stack.erase(stack.begin() + pos);
            }
        }
    };
    place(place, 1);
    return best;
}

Solution best_given_pickup(const Instance& inst, const Tour& t1, std::int64_t assignment_cap) {
    validate_instance(inst);
    if (!is_permutation_tour(t1, inst.n))
        throw std::invalid_argument("best_given_pickup: tour must cover 1..n");
    checked_pow(inst.k, inst.n, assignment_cap, "best_given_pickup");

    const Cost c1 = tour_cost(t1, inst.d1);
    Solution best;
    best.value = kInf;
    std::vector<int> assign(inst.n, 0);  // odometer over stack labels
    for (;;) {
        StackingOrder p;
        p.stacks.assign(inst.k, {});
        for (int i = 0; i < inst.n; ++i) p.stacks[assign[i]].push_back(t1.seq[i]);
        const TourCost del = optimal_delivery_tour(p, inst.d2);
        if (c1 + del.cost < best.value) best = {t1, del.tour, std::move(p), c1 + del.cost};

        int i = 0;
        while (i < inst.n && assign[i] == inst.k - 1) assign[i++] = 0;
        if (i == inst.n) break;
        ++assign[i];
    }
    return best;
}

Solution best_given_delivery(const Instance& inst, const Tour& t2, std::int64_t assignment_cap) {
    validate_instance(inst);
    if (!is_permutation_tour(t2, inst.n))
        throw std::invalid_argument("best_given_delivery: tour must cover 1..n");
    checked_pow(inst.k, inst.n, assignment_cap, "best_given_delivery");

    const Cost c2 = tour_cost(t2, inst.d2);
    Solution best;
    best.value = kInf;
    std::vector<int> assign(inst.n, 0);
    for (;;) {
        StackingOrder p;
        p.stacks.assign(inst.k, {});
        // Later deliveries sit lower, which settles the delivery side.
        for (int i = inst.n - 1; i >= 0; --i) p.stacks[assign[i]].push_back(t2.seq[i]);
        const TourCost pick = optimal_pickup_tour(p, inst.d1);
        if (pick.cost + c2 < best.value) best = {pick.tour, t2, std::move(p), pick.cost + c2};

        int i = 0;
        while (i < inst.n && assign[i] == inst.k - 1) assign[i++] = 0;
        if (i == inst.n) break;
        ++assign[i];
    }
    return best;
}

Solution tws(const Instance& inst, TourSide side, const std::optional<Tour>& fixed_tour,
             int hk_cap, std::int64_t assignment_cap) {
    validate_instance(inst);
    const Tour t = fixed_tour
                       ? *fixed_tour
                       : held_karp(side == TourSide::Pickup ? inst.d1 : inst.d2,
                                   Objective::Min, hk_cap)
                             .tour;
    return side == TourSide::Pickup ? best_given_pickup(inst, t, assignment_cap)
                                    : best_given_delivery(inst, t, assignment_cap);
}

DistanceMatrix aggregate_distance(const Instance& inst, Alpha alpha, Cost scale) {
    validate_instance(inst);
    if (alpha.num <= 0 || alpha.num >= alpha.den)
        throw std::invalid_argument("aggregate distance: alpha must lie strictly in (0,1)");
    if (scale < 1) throw std::invalid_argument("aggregate distance: scale must be positive");

    const int side = inst.n + 1;
    DistanceMatrix out(side, std::vector<Cost>(side, 0));
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
            const Cost numer =
                2 * scale * (alpha.num * inst.d1[a][b] + (alpha.den - alpha.num) * inst.d2[b][a]);
            if (numer % alpha.den != 0)
                throw std::invalid_argument(
                    "aggregate distance: entries are not integral; supply a scale that clears "
                    "the denominator");
            out[a][b] = numer / alpha.den;
        }
    }
    return out;
}

Solution twd(const Instance& inst, Alpha alpha, Cost scale, int hk_cap) {
    const DistanceMatrix agg = aggregate_distance(inst, alpha, scale);
    const Tour t1 = held_karp(agg, Objective::Min, hk_cap).tour;
    const Tour t2 = reversed_tour(t1);
    StackingOrder p;
    p.stacks.assign(inst.k, {});
    p.stacks[0] = t1.seq;  // one stack: push in pickup order, pop in reverse
    const Cost value = tour_cost(t1, inst.d1) + tour_cost(t2, inst.d2);
    return {t1, t2, std::move(p), value};
}

BoundsReport bounds_report(const Instance& inst, int pair_cap, int hk_cap) {
    BoundsReport r;
    r.opt_tsp1 = held_karp(inst.d1, Objective::Min, hk_cap).cost;
    r.wor_tsp1 = held_karp(inst.d1, Objective::Max, hk_cap).cost;
    r.opt_tsp2 = held_karp(inst.d2, Objective::Min, hk_cap).cost;
    r.wor_tsp2 = held_karp(inst.d2, Objective::Max, hk_cap).cost;
    const PairScanResult scan = scan_tour_pairs(inst, pair_cap);
    r.opt_kstsp = scan.min_value;
    r.wor_kstsp = scan.max_value;

    const Cost cross = std::min(r.opt_tsp1 + r.wor_tsp2, r.wor_tsp1 + r.opt_tsp2);
    r.chain_ok = r.opt_tsp1 + r.opt_tsp2 <= r.opt_kstsp &&
                 r.opt_kstsp <= cross && cross <= r.wor_kstsp &&
                 r.wor_kstsp <= r.wor_tsp1 + r.wor_tsp2;
    return r;
}

}  // namespace kstsp
