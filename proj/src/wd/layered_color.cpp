#include "wd/layered_color.hpp"

#include <algorithm>

#include "wd/centered.hpp"

namespace wd {

namespace {

// strip subgraph between the given layers (inclusive range), with the bags of
// the witness decomposition restricted to it
struct Strip {
    InducedSubgraph sub;
    RootedTreeDecomposition rtd;
};

Strip cut_strip(const Graph& g, const RootedTreeDecomposition& rtd,
                const Layering& ly, int lo, int hi) {
    Strip out;
    VertexSet verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ly.layer[v] >= lo && ly.layer[v] <= hi) verts.push_back(v);
    out.sub = induced_subgraph(g, verts);
    out.rtd.parent = rtd.parent;
    out.rtd.root = rtd.root;
    out.rtd.bags.resize(rtd.node_count());
    for (int t = 0; t < rtd.node_count(); ++t) {
        VertexSet bag;
        for (int v : rtd.bags[t])
            if (out.sub.to_sub[v] != -1) bag.push_back(out.sub.to_sub[v]);
        std::sort(bag.begin(), bag.end());
        out.rtd.bags[t] = std::move(bag);
    }
    return out;
}

// Colors one strip with the tree-width pipeline at the given scale and
// reports the max monochromatic-component diameter in plain G hops, measured
// inside the widened strip (an upper bound for the ambient distance).
struct StripColoring {
    Coloring coloring;  // over the strip subgraph
    long long diameter_g = 0;
};

StripColoring color_strip(const Strip& strip, int scale,
                          const ColorOptions& copt) {
    StripColoring out;
    if (strip.sub.graph.vertex_count() == 0) {
        out.coloring.ell = scale;
        out.coloring.m = 2;
        return out;
    }
    auto metrics = td_metrics(strip.rtd);
    int w_strip = std::max(metrics.width, 1);
    auto res =
        color_bounded_treewidth(strip.sub.graph, scale, w_strip, strip.rtd, copt);
    out.coloring = std::move(res.coloring);
    // exact diameters for small components; 2*eccentricity upper bound for
    // large ones (only feeds the scheme parameters, never the certificate)
    BfsScratch bfs;
    for (const auto& mc : mono_components(strip.sub.graph, out.coloring)) {
        if (mc.vertices.size() <= 1) continue;
        if (mc.vertices.size() <= 256) {
            auto wdm = weak_diameter_power(strip.sub.graph, 1, mc.vertices);
            out.diameter_g = std::max(out.diameter_g, wdm.g_hops);
        } else {
            bfs.run(strip.sub.graph,
                    std::span<const int>{mc.vertices.data(), 1},
                    strip.sub.graph.vertex_count());
            long long ecc = 0;
            for (int v : mc.vertices)
                ecc = std::max<long long>(ecc, bfs.dist(v));
            out.diameter_g = std::max(out.diameter_g, 2 * ecc);
        }
    }
    return out;
}

}  // namespace

LayeredResult color_layered(const Graph& g, int ell,
                            const RootedTreeDecomposition& rtd,
                            const Layering& ly, int w,
                            const LayeredOptions& opt) {
    if (ell < 1) throw LayeredError("scale must be >= 1");
    {
        auto td = validate_td(g, rtd);
        if (!td.ok)
            throw LayeredError("invalid tree-decomposition: " +
                               td.violation->message);
        auto lv = validate_layering(g, ly);
        if (!lv.ok)
            throw LayeredError("invalid layering at edge (" +
                               std::to_string(lv.violating_edge->first) + "," +
                               std::to_string(lv.violating_edge->second) + ")");
        int lw = layered_width(g, rtd, ly);
        if (lw > w)
            throw LayeredError("layered width " + std::to_string(lw) +
                               " exceeds w = " + std::to_string(w));
    }

    ColorOptions copt;
    copt.debug_certify = opt.debug_certify;
    const int n_layers = std::max(ly.layer_count(), 1);

    LayeredResult best;
    bool best_set = false;
    for (int esc = 0; esc <= opt.escalation_cap; ++esc) {
        const int q = (6 * ell) << esc;
        StripPlan plan;
        plan.strip_layers = q;
        plan.margin_even = ell;
        plan.escalation = esc;

        Coloring final;
        final.ell = ell;
        final.m = 3;
        final.color.assign(g.vertex_count(), 0);

        const int n_strips = (n_layers + q - 1) / q;

        // even strips first: scale ell, palette {1,2}
        long long d_even = 0;
        for (int s = 0; s < n_strips; s += 2) {
            int lo = s * q, hi = std::min((s + 1) * q, n_layers) - 1;
            Strip strip = cut_strip(g, rtd, ly, std::max(lo - ell, 0), hi + ell);
            auto sc = color_strip(strip, ell, copt);
            d_even = std::max(d_even, sc.diameter_g);
            for (int i = 0; i < strip.sub.graph.vertex_count(); ++i) {
                int v = strip.sub.to_parent[i];
                if (ly.layer[v] < lo || ly.layer[v] > hi) continue;  // margin only
                // fault hook: wipe the even strips with the odd strips' color
                // so a broken strip colorer chains across the whole layering
                final.color[v] = opt.fault_inject ? 3 : sc.coloring.color[i];
            }
        }

        // odd strips: escalated secondary scale, palette {2,3}
        long long ell2 = (2LL * ell + 2 * d_even + 1) << esc;
        if (ell2 > g.vertex_count() + 1) ell2 = g.vertex_count() + 1;
        plan.ell_secondary = static_cast<int>(ell2);
        plan.margin_odd = static_cast<int>(ell2);
        plan.d_even = d_even;

        long long d_odd = 0;
        for (int s = 1; s < n_strips; s += 2) {
            int lo = s * q, hi = std::min((s + 1) * q, n_layers) - 1;
            Strip strip =
                cut_strip(g, rtd, ly, std::max(lo - plan.margin_odd, 0),
                          hi + plan.margin_odd);
            auto sc = color_strip(strip, static_cast<int>(ell2), copt);
            d_odd = std::max(d_odd, sc.diameter_g);
            for (int i = 0; i < strip.sub.graph.vertex_count(); ++i) {
                int v = strip.sub.to_parent[i];
                if (ly.layer[v] < lo || ly.layer[v] > hi) continue;
                final.color[v] = sc.coloring.color[i] + 1;  // {1,2} -> {2,3}
            }
        }
        plan.d_odd = d_odd;

        // chain bound: one shared odd component plus an even component and an
        // ell-link hanging off each end
        long long chain_g = d_odd + 2 * (ell + d_even);
        Bound claimed = Bound((chain_g + ell - 1) / ell);
        if (claimed < 1) claimed = 1;

        auto rep = certify(g, final, claimed, false, opt.threads,
                           /*truncate_at_bound=*/true);
        int achieved = rep.worst >= 0 ? rep.components[rep.worst].wd_power : 0;
        if (rep.pass) {
            LayeredResult out;
            out.certified = true;
            out.coloring = std::move(final);
            out.bound_claimed = claimed;
            out.achieved = achieved;
            out.plan = plan;
            out.escalations = esc;
            out.report = std::move(rep);
            return out;
        }
        // keep the best failing attempt for diagnostics
        if (!best_set || achieved < best.achieved) {
            best_set = true;
            best.coloring = std::move(final);
            best.bound_claimed = claimed;
            best.achieved = achieved;
            best.plan = plan;
            best.escalations = esc;
            best.report = std::move(rep);
        }
    }
    best.certified = false;
    return best;
}

ExtendedWitness extend_witness_clique_attach(
    const Graph& gp, const RootedTreeDecomposition& rtd, const Layering& ly,
    const std::vector<VertexSet>& clique_per_new_vertex) {
    const int n = gp.vertex_count();
    auto edges = gp.edges();
    ExtendedWitness out;
    out.rtd = rtd;
    out.layering = ly;

    auto trace = vertex_traces(n, rtd);
    int next = n;
    for (const auto& clique : clique_per_new_vertex) {
        if (!is_sorted_unique(clique))
            throw LayeredError("attachment set not sorted/unique");
        for (int u : clique) {
            if (u < 0 || u >= n)
                throw LayeredError("attachment to a non-original vertex");
            for (int v : clique)
                if (u < v && !gp.has_edge(u, v))
                    throw LayeredError("attachment set is not a clique: (" +
                                       std::to_string(u) + "," +
                                       std::to_string(v) + ") missing");
        }
        int host = -1;
        int layer = 0;
        if (clique.empty()) {
            host = rtd.root;  // isolated vertex: own leaf bag, layer 0
        } else {
            // a bag containing the whole clique (smallest node id)
            std::vector<int> common = trace[clique[0]];
            for (size_t i = 1; i < clique.size() && !common.empty(); ++i) {
                std::vector<int> merged;
                std::set_intersection(common.begin(), common.end(),
                                      trace[clique[i]].begin(),
                                      trace[clique[i]].end(),
                                      std::back_inserter(merged));
                common = std::move(merged);
            }
            if (common.empty())
                throw LayeredError("no bag contains the attachment clique");
            host = common.front();
            layer = ly.layer[clique[0]];
            for (int u : clique) layer = std::min(layer, ly.layer[u]);
        }
        int v = next++;
        for (int u : clique) edges.emplace_back(u, v);
        VertexSet bag = clique;
        bag.push_back(v);
        out.rtd.parent.push_back(host);
        out.rtd.bags.push_back(std::move(bag));
        out.layering.layer.push_back(layer);
    }
    out.graph = Graph::build(next, edges);
    return out;
}

ApexLayeredResult color_apex_layered(const Graph& g, const VertexSet& apices,
                                     int ell,
                                     const RootedTreeDecomposition& rtd_minus,
                                     const Layering& ly_minus, int w,
                                     const LayeredOptions& opt) {
    ApexLayeredResult out;
    LayeredResult inner;
    auto base = [&](const Graph& sub) {
        inner = color_layered(sub, ell, rtd_minus, ly_minus, w, opt);
        if (!inner.certified)
            throw LayeredError("layered coloring of graph minus apices failed");
        return std::make_pair(inner.coloring, Bound(inner.achieved));
    };
    auto res = color_with_apices(g, apices, ell, 3, base);
    out.coloring = std::move(res.coloring);
    out.bound = res.bound;
    out.layered_measured = res.base_bound;
    out.layered = std::move(inner);
    return out;
}

}  // namespace wd
