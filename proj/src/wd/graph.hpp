#ifndef WD_GRAPH_HPP
#define WD_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wd {

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

inline constexpr int kInfDist = std::numeric_limits<int>::max();

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable undirected simple graph in CSR form. Vertex ids are dense,
// 0-based; adjacency lists are sorted so every iteration order is
// reproducible run-to-run.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(adj_.size() / 2); }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }
    int degree(int v) const { return off_[v + 1] - off_[v]; }

    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<int> off_{0};
    std::vector<int> adj_;
};

// Reusable multi-source truncated BFS working set. dist_ entries touched by a
// run are rolled back afterwards, so repeated small queries on a big graph
// stay cheap.
class BfsScratch {
public:
    void attach(const Graph& g) {
        if (static_cast<int>(dist_.size()) < g.vertex_count())
            dist_.assign(g.vertex_count(), -1);
    }

    // Runs BFS from `sources` up to depth `cap`, restricted to vertices for
    // which `admit` returns true (sources are admitted unconditionally).
    // Returns visited vertices in discovery order; dist() is valid for them
    // until the next run.
    template <typename Admit>
    const std::vector<int>& run(const Graph& g, std::span<const int> sources,
                                long long cap, Admit admit) {
        attach(g);
        rollback();
        for (int s : sources) {
            if (dist_[s] != -1) continue;
            dist_[s] = 0;
            order_.push_back(s);
        }
        for (size_t head = 0; head < order_.size(); ++head) {
            int u = order_[head];
            if (dist_[u] >= cap) continue;
            for (int v : g.neighbors(u)) {
                if (dist_[v] != -1 || !admit(v)) continue;
                dist_[v] = dist_[u] + 1;
                order_.push_back(v);
            }
        }
        return order_;
    }

    const std::vector<int>& run(const Graph& g, std::span<const int> sources,
                                long long cap) {
        return run(g, sources, cap, [](int) { return true; });
    }

    int dist(int v) const { return dist_[v]; }
    const std::vector<int>& order() const { return order_; }

private:
    void rollback() {
        for (int v : order_) dist_[v] = -1;
        order_.clear();
    }

    std::vector<int> dist_;
    std::vector<int> order_;
};

// Vertices at distance <= cap from `sources`, with exact multi-source
// distances, as (vertex, distance) pairs in discovery order.
std::vector<std::pair<int, int>> bounded_bfs(const Graph& g,
                                             const VertexSet& sources,
                                             long long cap);

// Distance between u and v in G^ell, i.e. ceil(d_G(u,v)/ell).
// Returns kInfDist when u and v lie in different components.
int power_distance(const Graph& g, int ell, int u, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;     // parent id -> sub id, -1 when absent
    std::vector<int> to_parent;  // sub id -> parent id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Connected components as disjoint sorted vertex sets, ordered by minimum id.
std::vector<VertexSet> components(const Graph& g);

bool is_sorted_unique(const VertexSet& s);

}  // namespace wd

#endif
