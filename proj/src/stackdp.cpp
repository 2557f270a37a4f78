#include "kstsp/stackdp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kstsp/solve.hpp"

namespace kstsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();  // sentinel, never added to

// Mixed-radix view of the progress vector e: index(e) = sum e[l] * mult[l],
// digit l running over 0..q[l].
struct StateSpace {
    std::vector<int> q;            // stack sizes
    std::vector<std::int64_t> mult;
    std::int64_t count = 1;
    int n = 0;

    explicit StateSpace(const StackingOrder& p) {
        for (const auto& s : p.stacks) {
            q.push_back(static_cast<int>(s.size()));
            mult.push_back(count);
            n += static_cast<int>(s.size());
            count *= static_cast<std::int64_t>(s.size()) + 1;
            if (count > (std::int64_t(1) << 22))
                throw CapExceeded("stack tour DP: state space too large");
        }
    }
};

void check_partition(const StackingOrder& p, int* n_out) {
    if (p.stacks.empty()) throw std::invalid_argument("stack tour DP: no stacks");
    int n = 0;
    for (const auto& s : p.stacks) n += static_cast<int>(s.size());
    if (n < 1) throw std::invalid_argument("stack tour DP: empty partition");
    std::vector<char> seen(n + 1, 0);
    for (const auto& s : p.stacks)
        for (const int item : s) {
            if (item < 1 || item > n || seen[item])
                throw std::invalid_argument("stack tour DP: stacks must partition 1..n");
            seen[item] = 1;
        }
    *n_out = n;
}

}  // namespace

TourCost optimal_pickup_tour(const StackingOrder& p, const DistanceMatrix& d1) {
    int n = 0;
    check_partition(p, &n);
    if (static_cast<std::size_t>(n) + 1 != d1.size())
        throw std::invalid_argument("stack tour DP: matrix side does not match item count");

    const int k = static_cast<int>(p.stacks.size());
    if (n == 1) {  // forced tour, skip the table
        for (const auto& s : p.stacks)
            if (!s.empty()) return {Tour{{s[0]}}, d1[0][s[0]] + d1[s[0]][0]};
    }

    const StateSpace sp(p);
    const std::int64_t states = sp.count;
    // label(e, l): cheapest way to pick the items counted by e, ending on top
    // of stack l. Only e[l] >= 1 entries are ever finite.
    std::vector<Cost> label(static_cast<std::size_t>(states) * k, kInf);
    std::vector<std::int16_t> parent(static_cast<std::size_t>(states) * k, -1);
    std::vector<int> layer(states, 0);
    for (std::int64_t s = 1; s < states; ++s) {
        std::int64_t rest = s;
        int total = 0;
        for (int l = 0; l < k; ++l) {
            total += static_cast<int>(rest % (sp.q[l] + 1));
            rest /= sp.q[l] + 1;
        }
        layer[s] = total;
    }

    // Layer 1: one item picked, straight from the depot.
    for (int l = 0; l < k; ++l)
        if (sp.q[l] >= 1)
            label[static_cast<std::size_t>(sp.mult[l]) * k + l] = d1[0][p.stacks[l][0]];

    std::vector<int> digits(k);
    for (int lay = 2; lay <= n; ++lay) {
        for (std::int64_t s = 1; s < states; ++s) {
            if (layer[s] != lay) continue;
            std::int64_t rest = s;
            for (int l = 0; l < k; ++l) {
                digits[l] = static_cast<int>(rest % (sp.q[l] + 1));
                rest /= sp.q[l] + 1;
            }
            for (int l = 0; l < k; ++l) {
                if (digits[l] == 0) continue;
                const int item = p.stacks[l][digits[l] - 1];
                const std::int64_t prev = s - sp.mult[l];
                Cost best = kInf;
                int best_from = -1;
                for (int lp = 0; lp < k; ++lp) {
                    const int prev_digit = lp == l ? digits[l] - 1 : digits[lp];
                    if (prev_digit == 0) continue;
                    const Cost base = label[static_cast<std::size_t>(prev) * k + lp];
                    if (base == kInf) continue;
                    const Cost cand = base + d1[p.stacks[lp][prev_digit - 1]][item];
                    if (cand < best) {  // strict: smallest lp wins ties
                        best = cand;
                        best_from = lp;
                    }
                }
                label[static_cast<std::size_t>(s) * k + l] = best;
                parent[static_cast<std::size_t>(s) * k + l] = static_cast<std::int16_t>(best_from);
            }
        }
    }

    const std::int64_t full = states - 1;
    Cost best = kInf;
    int best_l = -1;
    for (int l = 0; l < k; ++l) {
        if (sp.q[l] == 0) continue;
        const Cost base = label[static_cast<std::size_t>(full) * k + l];
        if (base == kInf) continue;
        const Cost cand = base + d1[p.stacks[l][sp.q[l] - 1]][0];
        if (cand < best) {
            best = cand;
            best_l = l;
        }
    }

    Tour tour;
    tour.seq.resize(n);
    std::int64_t s = full;
    std::vector<int> e(sp.q);
    int l = best_l;
    for (int pos = n - 1; pos >= 0; --pos) {
        tour.seq[pos] = p.stacks[l][e[l] - 1];
        const int from = parent[static_cast<std::size_t>(s) * k + l];
        s -= sp.mult[l];
        --e[l];
        l = from;
    }
    return {tour, best};
}

TourCost optimal_delivery_tour(const StackingOrder& p, const DistanceMatrix& d2) {
    StackingOrder reversed = p;
    for (auto& s : reversed.stacks) std::reverse(s.begin(), s.end());
    return optimal_pickup_tour(reversed, d2);
}

Solution optimal_tours_given_stacks(const Instance& inst, const StackingOrder& p) {
    int nonempty = 0;
    for (const auto& s : p.stacks)
        if (!s.empty()) ++nonempty;
    if (nonempty > inst.k)
        throw std::invalid_argument("stack tour DP: more nonempty stacks than the instance allows");

    const TourCost pick = optimal_pickup_tour(p, inst.d1);
    const TourCost del = optimal_delivery_tour(p, inst.d2);
    return {pick.tour, del.tour, p, pick.cost + del.cost};
}

}  // namespace kstsp
