#ifndef WD_TREE_COLOR_HPP
#define WD_TREE_COLOR_HPP

#include <optional>

#include "wd/construction.hpp"

namespace wd {

struct TreeColorError : std::runtime_error {
    explicit TreeColorError(const std::string& what) : std::runtime_error(what) {}
};

struct ColorOptions {
    // Re-certifies every recursion level against its intermediate bound and
    // throws on failure. On by default under tests, off in release runs.
    bool debug_certify = false;
};

struct TreeColorResult {
    Coloring coloring;
    Bound bound = 0;  // f*(eta) for the construction's declared base bounds
};

// Extends the precoloring c (0 = unset, nonzero exactly on z, values 1..m)
// to an m-coloring of g^ell with weak diameter in g^ell at most the returned
// bound. Requires m >= 2 and z inside the 3*ell-ball of the root bag.
//
// The eta-recursion nests calls (depth <= theta); the same-eta recursion on
// far subtrees runs as an explicit work stack over light-weight subtree
// views, so decompositions with very deep trees do not exhaust the call
// stack and subtrees are never copied wholesale.
TreeColorResult color_construction(const Graph& g, const Construction& con,
                                   int ell, int m, const VertexSet& z,
                                   const std::vector<int>& c,
                                   const ColorOptions& opt = {});

// Partition of `cut` where two cut vertices share a part iff they are linked
// by a chain of cut vertices with consecutive ones joined by paths of length
// <= 7*ell inside g_piece. Parts are sorted by minimum member.
std::vector<VertexSet> boundary_partition(const Graph& g_piece,
                                          const VertexSet& cut, int ell);

struct TwColorResult {
    Coloring coloring;
    Bound bound = 0;
    int width = -1;  // width of the decomposition actually used
};

// 2-coloring of g^ell for graphs of tree-width <= w. Uses the supplied
// decomposition when given, otherwise the heuristic decomposer (which must
// achieve width <= w).
TwColorResult color_bounded_treewidth(
    const Graph& g, int ell, int w,
    const std::optional<RootedTreeDecomposition>& rtd = {},
    const ColorOptions& opt = {});

}  // namespace wd

#endif
