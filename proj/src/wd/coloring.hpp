#ifndef WD_COLORING_HPP
#define WD_COLORING_HPP

#include <string>
#include <utility>
#include <vector>

#include "wd/bounds.hpp"
#include "wd/graph.hpp"

namespace wd {

struct ColoringError : std::runtime_error {
    explicit ColoringError(const std::string& what) : std::runtime_error(what) {}
};

// Total m-coloring of a graph, to be read at scale ell: monochromatic
// components are taken in G^ell, not in G. Colors are 1..m.
struct Coloring {
    int ell = 1;
    int m = 1;
    std::vector<int> color;

    void check(const Graph& g) const;
};

struct MonoComponent {
    int color = 0;
    VertexSet vertices;
};

// Maximal same-color sets connected in G^ell. Two same-colored vertices are
// adjacent here iff d_G <= ell; paths of the underlying BFS may pass through
// vertices of any color. Deterministic order (by minimum vertex id).
std::vector<MonoComponent> mono_components(const Graph& g, const Coloring& c);

struct WeakDiameter {
    int power_hops = 0;            // max over pairs of ceil(d_G/ell); kInfDist if s spans components
    long long g_hops = 0;          // exact max pairwise distance in G
    std::pair<int, int> witness{-1, -1};
    bool truncated = false;        // measurement stopped at the cap
};

// Exact weak diameter of `s` in G^ell with the achieving pair. A set spanning
// several components of g yields power_hops == kInfDist (reported, not an
// error). With cap_hops >= 0 the search stops once the diameter provably
// exceeds the cap (power_hops = cap_hops + 1, truncated); values within the
// cap stay exact.
WeakDiameter weak_diameter_power(const Graph& g, int ell, const VertexSet& s,
                                 int cap_hops = -1);

struct ComponentRecord {
    int color = 0;
    int size = 0;
    int wd_power = 0;
    long long wd_g = 0;
    std::pair<int, int> witness{-1, -1};
    bool truncated = false;
};

struct CertificateReport {
    Bound bound_claimed = 0;
    bool in_g_hops = false;  // compare against wd_g instead of wd_power
    bool pass = false;
    int worst = -1;  // index of the worst component record
    std::vector<ComponentRecord> components;

    int worst_wd() const {
        if (worst < 0) return 0;
        return in_g_hops ? static_cast<int>(components[worst].wd_g)
                         : components[worst].wd_power;
    }
};

// Measures every monochromatic component and checks it against the claimed
// bound. Weak diameter is reported in G^ell hops by default; in_g_hops
// switches to plain G distance. threads > 1 parallelizes the per-component
// diameter measurement only; results are identical either way.
// truncate_at_bound caps the per-component search just above the claimed
// bound: pass/fail and all passing diameters stay exact, only the reported
// diameters of failing components are cut off.
CertificateReport certify(const Graph& g, const Coloring& c, const Bound& bound,
                          bool in_g_hops = false, int threads = 1,
                          bool truncate_at_bound = false);

// Dual view of a coloring: per color, the family of monochromatic component
// vertex sets. Distinct sets within one family are pairwise at G-distance > ell.
struct CoverFamily {
    int ell = 1;
    std::vector<std::vector<VertexSet>> families;
};

CoverFamily coloring_to_cover(const Graph& g, const Coloring& c);

// Minimum-index coloring of a cover; throws ColoringError when the cover
// misses a vertex. Checks that every monochromatic component of the result is
// contained in a single set of its family.
Coloring cover_to_coloring(const Graph& g, const CoverFamily& cf, int m = 0);

struct CoverValidation {
    bool ok = false;
    std::string message;
};

CoverValidation validate_cover(const Graph& g, const CoverFamily& cf);

}  // namespace wd

#endif
