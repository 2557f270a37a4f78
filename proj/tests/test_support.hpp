#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "kstsp/model.hpp"

// Shared fixtures and independent brute-force oracles. Everything here is
// deliberately naive: the test side must not share algorithms with the
// library it checks.
namespace kstsp::testing {

// 1 on the ring successor (mod n+1), 5 everywhere else.
inline DistanceMatrix cyclic_unit(int n) {
    DistanceMatrix d(n + 1, std::vector<Cost>(n + 1, 5));
    for (int u = 0; u <= n; ++u) {
        d[u][u] = 0;
        d[u][(u + 1) % (n + 1)] = 1;
    }
    return d;
}

// 1 on the ring predecessor: cheap exactly where the reverse ring drives.
inline DistanceMatrix reverse_cyclic_unit(int n) {
    DistanceMatrix d(n + 1, std::vector<Cost>(n + 1, 5));
    for (int u = 0; u <= n; ++u) {
        d[u][u] = 0;
        d[(u + 1) % (n + 1)][u] = 1;
    }
    return d;
}

// The benign 3-item workhorse: both rings optimal and mutually compatible.
inline Instance instance_a(int k = 2) {
    return {3, k, cyclic_unit(3), reverse_cyclic_unit(3)};
}

inline std::vector<Tour> all_tours(int n) {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<Tour> out;
    do out.push_back({seq});
    while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

inline void placements_rec(int item, int n, StackingOrder& cur,
                           std::vector<StackingOrder>& out) {
    if (item > n) {
        out.push_back(cur);
        return;
    }
    for (auto& stack : cur.stacks)
        for (std::size_t pos = 0; pos <= stack.size(); ++pos) {
            stack.insert(stack.begin() + pos, item);
            placements_rec(item + 1, n, cur, out);
            stack.erase(stack.begin() + pos);
        }
}

// Every ordered placement of 1..n into k labeled stacks, empties included.
inline std::vector<StackingOrder> all_placements(int n, int k) {
    StackingOrder cur;
    cur.stacks.assign(k, {});
    std::vector<StackingOrder> out;
    placements_rec(1, n, cur, out);
    return out;
}

// Minimum tour cost over all item orders that visit every stack bottom-up,
// by filtering full permutations. Exponential on purpose.
inline Cost brute_min_interleaving(const StackingOrder& p, const DistanceMatrix& d,
                                   Tour* arg_best = nullptr) {
    int n = 0;
    for (const auto& s : p.stacks) n += static_cast<int>(s.size());
    std::vector<int> stack_of(n + 1, -1), slot_of(n + 1, -1);
    for (std::size_t l = 0; l < p.stacks.size(); ++l)
        for (std::size_t j = 0; j < p.stacks[l].size(); ++j) {
            stack_of[p.stacks[l][j]] = static_cast<int>(l);
            slot_of[p.stacks[l][j]] = static_cast<int>(j);
        }

    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    Cost best = std::numeric_limits<Cost>::max();
    std::vector<int> used(p.stacks.size());
    do {
        std::fill(used.begin(), used.end(), 0);
        bool valid = true;
        for (int item : seq) {
            if (slot_of[item] != used[stack_of[item]]) {
                valid = false;
                break;
            }
            ++used[stack_of[item]];
        }
        if (!valid) continue;
        const Cost c = tour_cost({seq}, d);
        if (c < best) {
            best = c;
            if (arg_best) arg_best->seq = seq;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

inline StackingOrder reverse_stacks(StackingOrder p) {
    for (auto& s : p.stacks) std::reverse(s.begin(), s.end());
    return p;
}

inline Tour shuffled_tour(int n, std::mt19937_64& rng) {
    Tour t;
    t.seq.resize(n);
    std::iota(t.seq.begin(), t.seq.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(t.seq[i], t.seq[rng() % (i + 1)]);
    return t;
}

// Random ordered placement: a shuffled item order appended to random stacks.
inline StackingOrder random_placement(int n, int k, std::mt19937_64& rng) {
    StackingOrder p;
    p.stacks.assign(k, {});
    const Tour order = shuffled_tour(n, rng);
    for (int item : order.seq) p.stacks[rng() % k].push_back(item);
    return p;
}

}  // namespace kstsp::testing
