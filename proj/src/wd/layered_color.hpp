#ifndef WD_LAYERED_COLOR_HPP
#define WD_LAYERED_COLOR_HPP

#include <optional>

#include "wd/layering.hpp"
#include "wd/tree_color.hpp"

namespace wd {

struct LayeredError : std::runtime_error {
    explicit LayeredError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters of one strip-scheme attempt, serialized into reports.
struct StripPlan {
    int strip_layers = 0;    // Q
    int margin_even = 0;
    int margin_odd = 0;
    int ell_secondary = 0;   // scale used on odd strips
    long long d_even = 0;    // measured max even-strip component diameter (G hops)
    long long d_odd = 0;     // ditto for odd strips at the secondary scale
    int escalation = 0;
};

struct LayeredOptions {
    int escalation_cap = 4;
    int threads = 1;
    bool debug_certify = false;
    // test hook: corrupt one strip coloring to prove the certified-output
    // contract (never used outside tests)
    bool fault_inject = false;
};

struct LayeredResult {
    bool certified = false;
    Coloring coloring;
    Bound bound_claimed = 0;   // the chain bound the certificate was checked against
    int achieved = 0;          // measured max component weak diameter (G^ell hops)
    StripPlan plan;
    int escalations = 0;
    CertificateReport report;  // the final (passing or best failing) certificate
};

// Certified 3-coloring of g^ell for layered tree-width <= w. Strips of the
// layering are colored by the tree-width pipeline at alternating scales; the
// result is certified exactly and the parameters escalate (doubling the strip
// width and the secondary scale) until the certificate passes or the cap is
// exhausted. Never returns an uncertified success.
LayeredResult color_layered(const Graph& g, int ell,
                            const RootedTreeDecomposition& rtd,
                            const Layering& ly, int w,
                            const LayeredOptions& opt = {});

struct ExtendedWitness {
    Graph graph;
    RootedTreeDecomposition rtd;
    Layering layering;
};

// Attaches each new vertex to a clique of the original graph: the vertex
// joins the lower layer of its clique and hangs as a fresh leaf bag
// clique+vertex below a bag containing the clique. Layered width grows by at
// most 1.
ExtendedWitness extend_witness_clique_attach(
    const Graph& gp, const RootedTreeDecomposition& rtd, const Layering& ly,
    const std::vector<VertexSet>& clique_per_new_vertex);

struct ApexLayeredResult {
    Coloring coloring;
    Bound bound = 0;
    Bound layered_measured = 0;
    LayeredResult layered;
};

// Corollary-style composition: colors g - apices with the layered pipeline,
// assigns the apices color 1 and combines through the (|Z|,0)-centered set.
ApexLayeredResult color_apex_layered(const Graph& g, const VertexSet& apices,
                                     int ell,
                                     const RootedTreeDecomposition& rtd_minus,
                                     const Layering& ly_minus, int w,
                                     const LayeredOptions& opt = {});

}  // namespace wd

#endif
