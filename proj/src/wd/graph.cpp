#include "wd/graph.hpp"

#include <algorithm>

namespace wd {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    std::vector<std::pair<int, int>> dir;
    dir.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    Graph g;
    g.n_ = n;
    g.off_.assign(n + 1, 0);
    for (auto& [u, v] : dir) g.off_[u + 1]++;
    for (int i = 0; i < n; ++i) g.off_[i + 1] += g.off_[i];
    g.adj_.reserve(dir.size());
    for (auto& [u, v] : dir) g.adj_.push_back(v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(adj_.size() / 2);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> bounded_bfs(const Graph& g,
                                             const VertexSet& sources,
                                             long long cap) {
    BfsScratch bfs;
    const auto& order = bfs.run(g, sources, cap);
    std::vector<std::pair<int, int>> out;
    out.reserve(order.size());
    for (int v : order) out.emplace_back(v, bfs.dist(v));
    return out;
}

int power_distance(const Graph& g, int ell, int u, int v) {
    if (ell < 1) throw GraphError("scale must be >= 1");
    if (u == v) return 0;
    BfsScratch bfs;
    VertexSet src{u};
    bfs.run(g, src, g.vertex_count());
    int d = bfs.dist(v);
    if (d < 0) return kInfDist;
    return static_cast<int>((static_cast<long long>(d) + ell - 1) / ell);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_sorted_unique(s)) throw GraphError("vertex set not sorted/unique");
    InducedSubgraph out;
    out.to_sub.assign(g.vertex_count(), -1);
    out.to_parent = s;
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i];
        if (v < 0 || v >= g.vertex_count())
            throw GraphError("vertex id out of range in subgraph set");
        out.to_sub[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && out.to_sub[w] != -1)
                edges.emplace_back(out.to_sub[v], out.to_sub[w]);
    out.graph = Graph::build(static_cast<int>(s.size()), edges);
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<int> seen(g.vertex_count(), 0);
    BfsScratch bfs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        VertexSet src{v};
        const auto& order = bfs.run(g, src, g.vertex_count());
        VertexSet comp(order);
        std::sort(comp.begin(), comp.end());
        for (int u : comp) seen[u] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_sorted_unique(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

}  // namespace wd
