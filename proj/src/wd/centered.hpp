#ifndef WD_CENTERED_HPP
#define WD_CENTERED_HPP

#include <functional>
#include <optional>

#include "wd/bounds.hpp"
#include "wd/coloring.hpp"
#include "wd/graph.hpp"

namespace wd {

struct CenteredError : std::runtime_error {
    explicit CenteredError(const std::string& what) : std::runtime_error(what) {}
};

// Witness that a set Z is (k,r)-centered: Z is inside the radius-r ball of
// the centers S, with |S| <= k.
struct CenteredWitness {
    VertexSet centers;
    int radius = 0;
    int k = 0;
};

// Vertices within distance r of s (sorted).
VertexSet ball(const Graph& g, const VertexSet& s, long long r);

bool witness_certifies(const Graph& g, const VertexSet& z,
                       const CenteredWitness& w);

struct CombineResult {
    Coloring coloring;
    Bound bound = 0;
    Bound n_used = 0;  // weak-diameter bound of the rest-coloring that was combined
};

// Union of a partial coloring on a centered set Z with a coloring of g-Z.
// No vertex is ever recolored. c_z must be nonzero exactly on Z and c_rest
// nonzero exactly on V-Z (values in 1..m). When n_supplied is absent, the
// weak diameter of c_rest on (g-Z)^ell is measured exactly rather than
// trusting the caller. bound = bound_combine(w.k, w.radius, ell, N).
CombineResult combine_centered(const Graph& g, int ell, int m,
                               const VertexSet& z, const CenteredWitness& w,
                               const std::vector<int>& c_z,
                               const std::vector<int>& c_rest,
                               const std::optional<Bound>& n_supplied = {});

// Ends of the edges of a maximal matching, scanned in sorted edge order.
// At most twice the minimum vertex cover.
VertexSet vertex_cover_2approx(const Graph& g);

struct CoveredResult {
    Coloring coloring;
    Bound bound = 0;
    int cover_size = 0;
};

// Any m-coloring of a graph with a small vertex cover has bounded weak
// diameter, so the precoloring (0 = unset) is extended with color 1.
// bound = bound_combine(|cover|, 1, ell, 1); isolated vertices form
// singleton components of diameter 0 and are covered by that bound.
CoveredResult color_covered(const Graph& g, int ell, int m,
                            const std::vector<int>& precoloring = {});

using BaseColorer =
    std::function<std::pair<Coloring, Bound>(const Graph& sub)>;

struct ApexResult {
    Coloring coloring;
    Bound bound = 0;
    Bound base_bound = 0;  // measured bound of the base coloring on g-Z
};

// Colors g by deleting the apex set Z (colored 1), coloring g-Z with `base`,
// and combining through the (|Z|,0)-centered witness Z.
ApexResult color_with_apices(const Graph& g, const VertexSet& z, int ell, int m,
                             const BaseColorer& base);

}  // namespace wd

#endif
