#ifndef WD_HEURISTIC_TD_HPP
#define WD_HEURISTIC_TD_HPP

#include "wd/graph.hpp"
#include "wd/tree_decomposition.hpp"

namespace wd {

struct HeuristicError : std::runtime_error {
    explicit HeuristicError(const std::string& what) : std::runtime_error(what) {}
};

// Tree-decomposition from an elimination order: bag of v is v plus its
// neighbors at elimination time in the filled graph.
RootedTreeDecomposition td_from_elimination_order(const Graph& g,
                                                  const std::vector<int>& order);

// Exact tree-width by dynamic programming over eliminated subsets.
// Only for small graphs (|V| <= 20 or so); callers gate on size.
int exact_treewidth(const Graph& g);

// Valid tree-decomposition with exactly minimal width for |V| < 12 (subset
// DP over elimination orders), min-fill greedy otherwise. `budget` caps the
// accepted vertex count.
RootedTreeDecomposition heuristic_td(const Graph& g, int budget = 1 << 30);

}  // namespace wd

#endif
