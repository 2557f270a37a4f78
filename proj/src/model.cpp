#include "kstsp/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kstsp {

namespace {

// item -> (stack index, 0-based slot) over a stacking order.
struct Placement {
    std::vector<int> stack_of;
    std::vector<int> slot_of;
};

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Verifies that t1, t2 and p each cover exactly the items 1..n and builds
// the placement maps for p.
Placement checked_placement(const Tour& t1, const Tour& t2, const StackingOrder& p) {
    const int n = static_cast<int>(t1.seq.size());
    require(n >= 1, "triple: empty tour");
    require(is_permutation_tour(t1, n), "triple: t1 is not a permutation of 1..n");
    require(static_cast<int>(t2.seq.size()) == n && is_permutation_tour(t2, n),
            "triple: t2 does not cover the same items as t1");

    Placement pl;
    pl.stack_of.assign(n + 1, -1);
    pl.slot_of.assign(n + 1, -1);
    int covered = 0;
    for (std::size_t s = 0; s < p.stacks.size(); ++s) {
        const auto& stack = p.stacks[s];
        for (std::size_t i = 0; i < stack.size(); ++i) {
            const int item = stack[i];
            require(item >= 1 && item <= n, "triple: stack item outside 1..n");
            require(pl.stack_of[item] < 0, "triple: item stacked twice");
            pl.stack_of[item] = static_cast<int>(s);
            pl.slot_of[item] = static_cast<int>(i);
            ++covered;
        }
    }
    require(covered == n, "triple: stacks do not cover every item");
    return pl;
}

}  // namespace

Cost tour_cost(const Tour& tour, const DistanceMatrix& d) {
    if (tour.seq.empty()) throw std::invalid_argument("tour_cost: empty tour");
    if (tour.seq.size() + 1 != d.size())
        throw std::invalid_argument("tour_cost: tour length does not match matrix side");
    Cost total = d[0][tour.seq.front()];
    for (std::size_t i = 0; i + 1 < tour.seq.size(); ++i)
        total += d[tour.seq[i]][tour.seq[i + 1]];
    total += d[tour.seq.back()][0];
    return total;
}

bool check_triple_feasible(const Tour& t1, const Tour& t2, const StackingOrder& p) {
    checked_placement(t1, t2, p);
    const int n = static_cast<int>(t1.seq.size());
    std::vector<int> pos1(n + 1), pos2(n + 1);
    for (int i = 0; i < n; ++i) pos1[t1.seq[i]] = i;
    for (int i = 0; i < n; ++i) pos2[t2.seq[i]] = i;
    for (const auto& stack : p.stacks) {
        for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
            const int below = stack[i], above = stack[i + 1];
            if (pos1[below] > pos1[above]) return false;  // picked out of stack order
            if (pos2[below] < pos2[above]) return false;  // delivered under something
        }
    }
    return true;
}

bool simulate_triple(const Tour& t1, const Tour& t2, const StackingOrder& p) {
    const Placement pl = checked_placement(t1, t2, p);
    std::vector<int> height(p.stacks.size(), 0);
    for (const int item : t1.seq) {
        const int s = pl.stack_of[item];
        if (height[s] != pl.slot_of[item]) return false;
        ++height[s];
    }
    for (const int item : t2.seq) {
        const int s = pl.stack_of[item];
        if (height[s] == 0 || p.stacks[s][height[s] - 1] != item) return false;
        --height[s];
    }
    return true;
}

bool is_permutation_tour(const Tour& t, int n) {
    if (static_cast<int>(t.seq.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (const int v : t.seq) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void validate_instance(const Instance& inst) {
    require(inst.n >= 1, "instance: n must be positive");
    require(inst.k >= 1, "instance: k must be positive");
    const std::size_t side = static_cast<std::size_t>(inst.n) + 1;
    for (const DistanceMatrix* m : {&inst.d1, &inst.d2}) {
        require(m->size() == side, "instance: matrix side must be n+1");
        for (const auto& row : *m) {
            require(row.size() == side, "instance: matrix must be square");
            for (const Cost c : row) require(c >= 0, "instance: negative distance");
        }
    }
}

Tour canonical_tour(int n) {
    Tour t;
    t.seq.resize(n);
    for (int i = 0; i < n; ++i) t.seq[i] = i + 1;
    return t;
}

Tour reversed_tour(const Tour& t) {
    Tour r = t;
    std::reverse(r.seq.begin(), r.seq.end());
    return r;
}

}  // namespace kstsp
