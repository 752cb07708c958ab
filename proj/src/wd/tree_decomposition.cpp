#include "wd/tree_decomposition.hpp"

#include <algorithm>

namespace wd {

std::vector<std::vector<int>> RootedTreeDecomposition::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (int t = 0; t < node_count(); ++t)
        if (parent[t] >= 0) ch[parent[t]].push_back(t);
    return ch;
}

void RootedTreeDecomposition::reroot(int new_root) {
    std::vector<int> path;
    for (int t = new_root; t != -1; t = parent[t]) path.push_back(t);
    for (size_t i = path.size(); i-- > 1;) parent[path[i]] = path[i - 1];
    parent[new_root] = -1;
    root = new_root;
}

DecompositionMetrics td_metrics(const RootedTreeDecomposition& rtd) {
    DecompositionMetrics m;
    for (const auto& b : rtd.bags)
        m.width = std::max(m.width, static_cast<int>(b.size()) - 1);
    for (int t = 0; t < rtd.node_count(); ++t) {
        int p = rtd.parent[t];
        if (p < 0) continue;
        VertexSet inter;
        std::set_intersection(rtd.bags[t].begin(), rtd.bags[t].end(),
                              rtd.bags[p].begin(), rtd.bags[p].end(),
                              std::back_inserter(inter));
        m.adhesion = std::max(m.adhesion, static_cast<int>(inter.size()));
    }
    return m;
}

std::vector<std::vector<int>> vertex_traces(int n, const RootedTreeDecomposition& rtd) {
    std::vector<std::vector<int>> trace(n);
    for (int t = 0; t < rtd.node_count(); ++t)
        for (int v : rtd.bags[t]) trace[v].push_back(t);
    return trace;
}

static TdValidation fail(TdViolation v) {
    TdValidation out;
    out.ok = false;
    out.violation = std::move(v);
    return out;
}

TdValidation validate_td(const Graph& g, const RootedTreeDecomposition& rtd) {
    const int nodes = rtd.node_count();
    if (nodes == 0)
        return fail({TdViolation::kBadStructure, "decomposition has no nodes"});
    if (static_cast<int>(rtd.bags.size()) != nodes)
        return fail({TdViolation::kBadStructure, "bag count != node count"});
    if (rtd.root < 0 || rtd.root >= nodes || rtd.parent[rtd.root] != -1)
        return fail({TdViolation::kBadStructure, "root has a parent or is invalid"});

    int root_seen = 0;
    for (int t = 0; t < nodes; ++t) {
        if (rtd.parent[t] == -1) {
            root_seen++;
            continue;
        }
        if (rtd.parent[t] < 0 || rtd.parent[t] >= nodes)
            return fail({TdViolation::kBadStructure,
                         "parent out of range at node " + std::to_string(t),
                         -1, -1, -1, t});
    }
    if (root_seen != 1)
        return fail({TdViolation::kBadStructure, "tree must have exactly one root"});
    // Acyclicity: walking parents from every node must reach the root.
    // Depths are backfilled along each walked path, so the scan is linear.
    {
        std::vector<int> depth(nodes, -1);
        std::vector<int> path;
        depth[rtd.root] = 0;
        for (int t = 0; t < nodes; ++t) {
            int u = t;
            path.clear();
            while (u >= 0 && depth[u] == -1 &&
                   static_cast<int>(path.size()) <= nodes) {
                path.push_back(u);
                u = rtd.parent[u];
            }
            if (u < 0 || depth[u] == -1)
                return fail({TdViolation::kBadStructure,
                             "parent array contains a cycle", -1, -1, -1, t});
            for (size_t i = path.size(); i-- > 0;)
                depth[path[i]] = depth[rtd.parent[path[i]]] + 1;
        }
    }

    for (int t = 0; t < nodes; ++t) {
        if (!is_sorted_unique(rtd.bags[t]))
            return fail({TdViolation::kBadStructure,
                         "bag not sorted/unique at node " + std::to_string(t),
                         -1, -1, -1, t});
        for (int v : rtd.bags[t])
            if (v < 0 || v >= g.vertex_count())
                return fail({TdViolation::kBadStructure,
                             "bag vertex out of range at node " + std::to_string(t),
                             v, -1, -1, t});
    }

    auto trace = vertex_traces(g.vertex_count(), rtd);

    // Axiom (a): bags cover V(G).
    for (int v = 0; v < g.vertex_count(); ++v)
        if (trace[v].empty())
            return fail({TdViolation::kVertexUncovered,
                         "vertex " + std::to_string(v) + " appears in no bag", v});

    // Axiom (b): every edge inside some bag.
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            bool covered = false;
            const auto& tu = trace[u];
            const auto& tv = trace[v];
            size_t i = 0, j = 0;
            while (i < tu.size() && j < tv.size()) {
                if (tu[i] == tv[j]) { covered = true; break; }
                if (tu[i] < tv[j]) ++i; else ++j;
            }
            if (!covered)
                return fail({TdViolation::kEdgeUncovered,
                             "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") lies in no bag",
                             -1, u, v});
        }
    }

    // Axiom (c): traces induce connected subtrees. A trace is connected iff
    // exactly one of its nodes has its parent outside the trace.
    {
        std::vector<char> mark(nodes, 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int t : trace[v]) mark[t] = 1;
            int tops = 0;
            for (int t : trace[v])
                if (rtd.parent[t] == -1 || !mark[rtd.parent[t]]) ++tops;
            for (int t : trace[v]) mark[t] = 0;
            if (tops != 1)
                return fail({TdViolation::kTraceDisconnected,
                             "bags containing vertex " + std::to_string(v) +
                                 " do not induce a subtree",
                             v});
        }
    }

    TdValidation out;
    out.ok = true;
    out.metrics = td_metrics(rtd);
    return out;
}

}  // namespace wd
