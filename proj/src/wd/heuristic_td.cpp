#include "wd/heuristic_td.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace wd {

RootedTreeDecomposition td_from_elimination_order(const Graph& g,
                                                  const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw HeuristicError("elimination order must list every vertex once");
    if (n == 0) {
        RootedTreeDecomposition rtd;
        rtd.parent = {-1};
        rtd.root = 0;
        rtd.bags = {VertexSet{}};
        return rtd;
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1)
            throw HeuristicError("invalid elimination order");
        pos[order[i]] = i;
    }

    // Simulate elimination with fill-in; adjacency as sets of later vertices.
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u].insert(v);

    RootedTreeDecomposition rtd;
    rtd.parent.assign(n, -1);
    rtd.bags.assign(n, {});
    // node i of the tree corresponds to order[i]
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VertexSet bag{v};
        for (int u : adj[v]) bag.push_back(u);
        std::sort(bag.begin(), bag.end());
        rtd.bags[i] = std::move(bag);
        // connect fill neighbors and drop v
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (size_t a = 0; a < nb.size(); ++a) {
            adj[nb[a]].erase(v);
            for (size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        }
        adj[v].clear();
        // parent: node of the earliest-eliminated vertex in bag minus v
        int best = n;
        for (int u : rtd.bags[i])
            if (u != v) best = std::min(best, pos[u]);
        if (best < n) rtd.parent[i] = best;
    }
    // Attach parentless nodes (isolated pieces) into one tree under the last node.
    rtd.root = n - 1;
    rtd.parent[n - 1] = -1;
    for (int i = 0; i < n - 1; ++i)
        if (rtd.parent[i] == -1) rtd.parent[i] = n - 1;
    return rtd;
}

namespace {

// Degree of v when eliminated after the set S: neighbors of v outside S
// reachable through S.
int elimination_degree(const Graph& g, std::uint32_t s, int v,
                       std::vector<int>& stack, std::vector<char>& seen) {
    stack.clear();
    std::fill(seen.begin(), seen.end(), 0);
    seen[v] = 1;
    stack.push_back(v);
    int deg = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (s >> w & 1)
                stack.push_back(w);  // pass through eliminated vertices
            else
                ++deg;
        }
    }
    return deg;
}

}  // namespace

int exact_treewidth(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return -1;
    if (n > 20) throw HeuristicError("graph too large for exact tree-width");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> dp(full + 1, n);  // dp[S]: best max-degree eliminating S first
    std::vector<int> stack;
    std::vector<char> seen(n, 0);
    dp[0] = -1;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (dp[s] >= n) continue;
        if (s == full) break;
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            int deg = elimination_degree(g, s, v, stack, seen);
            int val = std::max(dp[s], deg);
            std::uint32_t t = s | (1u << v);
            if (val < dp[t]) dp[t] = val;
        }
    }
    return dp[full];
}

namespace {

std::vector<int> exact_elimination_order(const Graph& g) {
    const int n = g.vertex_count();
    const std::uint32_t full = (1u << n) - 1;
    int target = exact_treewidth(g);
    std::vector<int> order;
    std::vector<int> stack;
    std::vector<char> seen(n, 0);
    std::uint32_t s = 0;
    // feas[S]: the vertices outside S can be eliminated with all degrees
    // <= target once S is gone. Greedy completion against the known optimum.
    std::vector<char> feas(full + 1, 0);
    feas[full] = 1;
    for (std::uint32_t t = full; t-- > 0;) {
        for (int v = 0; v < n && !feas[t]; ++v) {
            if (t >> v & 1) continue;
            if (!feas[t | (1u << v)]) continue;
            if (elimination_degree(g, t, v, stack, seen) <= target) feas[t] = 1;
        }
    }
    while (s != full) {
        int picked = -1;
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1) continue;
            if (!feas[s | (1u << v)]) continue;
            if (elimination_degree(g, s, v, stack, seen) <= target) {
                picked = v;
                break;
            }
        }
        if (picked == -1)
            throw HeuristicError("exact elimination reconstruction failed");
        order.push_back(picked);
        s |= 1u << picked;
    }
    return order;
}

std::vector<int> min_fill_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u].insert(v);
    std::vector<char> gone(n, 0);

    auto fill_count = [&](int v) {
        long long f = 0;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b)
                if (!adj[nb[a]].count(nb[b])) ++f;
        return f;
    };

    std::vector<long long> score(n, -1);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (score[v] < 0) score[v] = fill_count(v);
            if (best == -1 || score[v] < score[best] ||
                (score[v] == score[best] &&
                 (adj[v].size() < adj[best].size() ||
                  (adj[v].size() == adj[best].size() && v < best))))
                best = v;
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (size_t a = 0; a < nb.size(); ++a) {
            adj[nb[a]].erase(best);
            for (size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        }
        adj[best].clear();
        // scores of the 2-neighborhood are stale
        for (int u : nb) {
            score[u] = -1;
            for (int w : adj[u]) score[w] = -1;
        }
    }
    return order;
}

}  // namespace

RootedTreeDecomposition heuristic_td(const Graph& g, int budget) {
    if (g.vertex_count() > budget)
        throw HeuristicError("graph exceeds the decomposition budget");
    if (g.vertex_count() == 0) return td_from_elimination_order(g, {});
    std::vector<int> order = g.vertex_count() < 12 ? exact_elimination_order(g)
                                                   : min_fill_order(g);
    return td_from_elimination_order(g, order);
}

}  // namespace wd
