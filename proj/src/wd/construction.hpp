#ifndef WD_CONSTRUCTION_HPP
#define WD_CONSTRUCTION_HPP

#include <functional>
#include <string>

#include "wd/bounds.hpp"
#include "wd/coloring.hpp"
#include "wd/graph.hpp"
#include "wd/tree_decomposition.hpp"

namespace wd {

struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what)
        : std::runtime_error(what) {}
};

// Base-class colorer handle. `color` must honor the precoloring (0 = unset,
// values 1..m) and return a coloring whose weak diameter in sub^ell is within
// the returned per-call bound; `declared` is the a-priori bound valid for
// every member graph this handle will be asked to color.
struct ColorerHandle {
    std::string name;
    std::function<std::pair<Coloring, Bound>(const Graph& sub, int ell, int m,
                                             const std::vector<int>& precoloring)>
        color;
    std::function<Bound(int ell)> declared;
};

ColorerHandle make_vertex_cover_colorer(int max_cover);
ColorerHandle make_trivial_small_colorer(int max_vertices);

// Rooted tree-decomposition annotated for the recursive coloring: adhesion
// and root bag at most theta, tree edges with adhesion above eta are
// near-trivial leaf edges, and the base classes are represented operationally
// by colorer handles.
struct Construction {
    RootedTreeDecomposition rtd;
    int eta = 0;
    int theta = 0;
    ColorerHandle colorer_f;
    ColorerHandle colorer_fprime;

    Bound declared_n(int ell) const {
        return std::max(colorer_f.declared(ell), colorer_fprime.declared(ell));
    }
    Bound declared_n_fplus(int ell) const { return declared_n(ell); }
};

struct ConstructionValidation {
    bool ok = false;
    std::string message;
    DecompositionMetrics metrics;
};

// Checks the testable invariants: valid tree-decomposition, adhesion <= theta,
// root bag <= theta, nonempty root bag when eta > 0, and every tree edge with
// adhesion above eta ends in a leaf whose bag adds at most one vertex.
ConstructionValidation validate_construction(const Graph& g,
                                             const Construction& con);

// Bounded tree-width instantiation: re-roots a width-<=w decomposition at a
// fresh singleton-bag node and binds eta = theta = w+1 with the vertex-cover
// colorer for the extended bags.
Construction make_tw_construction(const Graph& g, RootedTreeDecomposition rtd,
                                  int w);

// Declared base bound of the tree-width pipeline: members met by the
// vertex-cover colorer always have a cover of size <= theta, and the maximal
// matching collects at most twice that many vertices.
Bound tw_base_bound(int w, int ell);

}  // namespace wd

#endif
