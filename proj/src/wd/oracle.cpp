#include "wd/oracle.hpp"

#include <algorithm>
#include <thread>

namespace wd {

namespace {

// All-pairs distances in G^ell (kInfDist across components).
std::vector<std::vector<int>> power_matrix(const Graph& g, int ell) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> pd(n, std::vector<int>(n, kInfDist));
    BfsScratch bfs;
    for (int v = 0; v < n; ++v) {
        const auto& order = bfs.run(g, std::span<const int>{&v, 1}, n);
        for (int u : order)
            pd[v][u] = static_cast<int>(
                (static_cast<long long>(bfs.dist(u)) + ell - 1) / ell);
    }
    return pd;
}

struct Search {
    const std::vector<std::vector<int>>& pd;
    int n, m;
    std::vector<int> color;
    std::vector<int> best_color;
    int best;

    // max component weak diameter of the complete assignment, aborting at cap
    int evaluate(int cap) {
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            comp[s] = ncomp;
            stack.assign(1, s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0; v < n; ++v)
                    if (comp[v] == -1 && color[v] == color[u] && pd[u][v] == 1) {
                        comp[v] = ncomp;
                        stack.push_back(v);
                    }
            }
            ++ncomp;
        }
        int worst = 0;
        for (int u = 0; u < n && worst < cap; ++u)
            for (int v = u + 1; v < n; ++v)
                if (comp[u] == comp[v]) worst = std::max(worst, pd[u][v]);
        return worst;
    }

    void dfs(int i, int used) {
        if (best == 0) return;
        if (i == n) {
            int val = evaluate(best);
            if (val < best) {
                best = val;
                best_color = color;
            }
            return;
        }
        int limit = std::min(m, used + 1);
        for (int c = 1; c <= limit; ++c) {
            color[i] = c;
            dfs(i + 1, std::max(used, c));
        }
        color[i] = 0;
    }
};

}  // namespace

OracleResult brute_min_weak_diameter(const Graph& g, int ell, int m,
                                     int max_vertices, int threads) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw OracleError("instance too large for the exhaustive oracle");
    if (m < 1) throw OracleError("palette must be >= 1");
    OracleResult out;
    out.witness.ell = ell;
    out.witness.m = m;
    if (n == 0) return out;

    auto pd = power_matrix(g, ell);
    auto seeded = [&] {
        Search s{pd, n, m, std::vector<int>(n, 0), {}, kInfDist};
        s.color.assign(n, 1);  // the all-ones coloring seeds the cutoff
        s.best = s.evaluate(kInfDist);
        s.best_color = s.color;
        s.color.assign(n, 0);
        return s;
    };

    // top branching level: vertex 0 is canonically color 1, vertex 1 takes
    // color 1 or 2
    const int top = std::min(m, 2);
    if (threads <= 1 || n < 2 || top < 2) {
        Search s = seeded();
        s.dfs(0, 0);
        out.d_min = s.best;
        out.witness.color = s.best_color;
        return out;
    }
    std::vector<Search> branch(top, seeded());
    std::vector<std::thread> pool;
    for (int c = 0; c < top; ++c)
        pool.emplace_back([&, c] {
            branch[c].color[0] = 1;
            branch[c].color[1] = c + 1;
            branch[c].dfs(2, c + 1);
        });
    for (auto& t : pool) t.join();
    int pick = 0;
    for (int c = 1; c < top; ++c)
        if (branch[c].best < branch[pick].best) pick = c;
    out.d_min = branch[pick].best;
    out.witness.color = branch[pick].best_color;
    return out;
}

namespace {

bool proper_dfs(const std::vector<std::vector<char>>& adj, std::vector<int>& col,
                int i, int m, int used) {
    const int n = static_cast<int>(adj.size());
    if (i == n) return true;
    int limit = std::min(m, used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (adj[i][j] && col[j] == c) ok = false;
        if (!ok) continue;
        col[i] = c;
        if (proper_dfs(adj, col, i + 1, m, std::max(used, c))) return true;
    }
    col[i] = 0;
    return false;
}

}  // namespace

bool power_properly_colorable(const Graph& g, int ell, int m) {
    const int n = g.vertex_count();
    if (n > 24) throw OracleError("instance too large for the proper-coloring check");
    auto pd = power_matrix(g, ell);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) adj[u][v] = (u != v && pd[u][v] == 1);
    std::vector<int> col(n, 0);
    return proper_dfs(adj, col, 0, m, 0);
}

}  // namespace wd
