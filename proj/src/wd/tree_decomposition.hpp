#ifndef WD_TREE_DECOMPOSITION_HPP
#define WD_TREE_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "wd/graph.hpp"

namespace wd {

// Rooted tree-decomposition: a tree over node ids 0..node_count-1 given as a
// parent array (-1 at the root) with one bag per node.
struct RootedTreeDecomposition {
    std::vector<int> parent;
    int root = 0;
    std::vector<VertexSet> bags;

    int node_count() const { return static_cast<int>(parent.size()); }
    const VertexSet& bag(int t) const { return bags[t]; }

    // Children lists in ascending node order.
    std::vector<std::vector<int>> children() const;

    // Re-roots the tree at `new_root`, rewriting the parent array.
    void reroot(int new_root);
};

struct DecompositionMetrics {
    int width = -1;     // max bag size - 1
    int adhesion = 0;   // max |X_t ∩ X_parent(t)|
};

struct TdViolation {
    enum Kind { kBadStructure, kVertexUncovered, kEdgeUncovered, kTraceDisconnected };
    Kind kind;
    std::string message;
    int vertex = -1;
    int edge_u = -1, edge_v = -1;
    int node = -1;
};

struct TdValidation {
    bool ok = false;
    DecompositionMetrics metrics;
    std::optional<TdViolation> violation;
};

// Checks the three tree-decomposition axioms (bags cover V, every edge in
// some bag, connected traces) plus parent-array sanity. Metrics are exact on
// success; the first violation found is reported with witnesses.
TdValidation validate_td(const Graph& g, const RootedTreeDecomposition& rtd);

DecompositionMetrics td_metrics(const RootedTreeDecomposition& rtd);

// Per-vertex lists of nodes whose bag contains the vertex, each sorted.
std::vector<std::vector<int>> vertex_traces(int n, const RootedTreeDecomposition& rtd);

}  // namespace wd

#endif
