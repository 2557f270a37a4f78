#include "kstsp/compat.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstsp {

ConflictGraph build_conflict_graph(const Tour& t1, const Tour& t2) {
    const int n = static_cast<int>(t1.seq.size());
    if (n < 1 || !is_permutation_tour(t1, n) || !is_permutation_tour(t2, n))
        throw std::invalid_argument("conflict graph: tours must cover the same items 1..n");

    ConflictGraph g;
    g.pickup_rank.assign(n + 1, 0);
    g.delivery_rank.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) g.pickup_rank[t1.seq[i]] = i;
    for (int i = 0; i < n; ++i) g.delivery_rank[t2.seq[i]] = i;

    std::vector<char> touched(n + 1, 0);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const bool same1 = g.pickup_rank[a] < g.pickup_rank[b];
            const bool same2 = g.delivery_rank[a] < g.delivery_rank[b];
            if (same1 == same2) {  // same relative order in both visiting sequences
                g.edges.emplace_back(a, b);
                touched[a] = touched[b] = 1;
            }
        }
    }
    for (int v = 1; v <= n; ++v)
        if (touched[v]) g.vertices.push_back(v);
    return g;
}

Coloring min_coloring(const ConflictGraph& g) {
    Coloring out;
    out.color.assign(g.pickup_rank.size(), 0);
    if (g.vertices.empty()) return out;

    std::vector<int> order = g.vertices;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.pickup_rank[a] < g.pickup_rank[b];
    });
    // Vertices ascending in both ranks are always adjacent, so the longest
    // conflicting chain ending at v is a plain two-rank LIS.
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        int longest = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const int u = order[j];
            if (g.delivery_rank[u] < g.delivery_rank[v])
                longest = std::max(longest, out.color[u]);
        }
        out.color[v] = longest + 1;
        out.chi = std::max(out.chi, out.color[v]);
    }
    return out;
}

int lcs_length(const Tour& t1, const Tour& t2) {
    const int n = static_cast<int>(t1.seq.size());
    if (n < 1 || !is_permutation_tour(t1, n) || !is_permutation_tour(t2, n))
        throw std::invalid_argument("lcs: tours must cover the same items 1..n");
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            dp[i][j] = t1.seq[i - 1] == t2.seq[j - 1]
                           ? dp[i - 1][j - 1] + 1
                           : std::max(dp[i - 1][j], dp[i][j - 1]);
    return dp[n][n];
}

std::optional<StackingOrder> stacking_from_tours(const Tour& t1, const Tour& t2, int k) {
    if (k < 1) throw std::invalid_argument("stacking_from_tours: k must be positive");
    const ConflictGraph g = build_conflict_graph(t1, t2);
    const Coloring col = min_coloring(g);
    if (col.chi > k) return std::nullopt;

    StackingOrder p;
    p.stacks.assign(k, {});
    for (const int item : t1.seq) {
        const int c = col.color[item];
        p.stacks[c == 0 ? 0 : c - 1].push_back(item);
    }
    return p;
}

}  // namespace kstsp
