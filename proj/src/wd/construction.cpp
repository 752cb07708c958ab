#include "wd/construction.hpp"

#include <algorithm>

#include "wd/centered.hpp"

namespace wd {

ColorerHandle make_vertex_cover_colorer(int max_cover) {
    ColorerHandle h;
    h.name = "vertex_cover";
    h.color = [](const Graph& sub, int ell, int m,
                 const std::vector<int>& precoloring) {
        auto res = color_covered(sub, ell, m, precoloring);
        return std::make_pair(std::move(res.coloring), res.bound);
    };
    h.declared = [max_cover](int ell) {
        return bound_combine(2 * max_cover, 1, ell, Bound(1));
    };
    return h;
}

ColorerHandle make_trivial_small_colorer(int max_vertices) {
    ColorerHandle h;
    h.name = "trivial_small";
    h.color = [max_vertices](const Graph& sub, int ell, int m,
                             const std::vector<int>& precoloring) {
        if (sub.vertex_count() > max_vertices)
            throw ConstructionError("trivial colorer given an oversized member");
        Coloring c;
        c.ell = ell;
        c.m = m;
        c.color.assign(sub.vertex_count(), 1);
        for (size_t v = 0; v < precoloring.size(); ++v)
            if (precoloring[v] != 0) c.color[v] = precoloring[v];
        // any coloring works: the whole member is (max_vertices,0)-centered
        return std::make_pair(std::move(c),
                              bound_all_centered(max_vertices, 0, ell));
    };
    h.declared = [max_vertices](int ell) {
        return bound_all_centered(max_vertices, 0, ell);
    };
    return h;
}

ConstructionValidation validate_construction(const Graph& g,
                                             const Construction& con) {
    ConstructionValidation out;
    auto td = validate_td(g, con.rtd);
    if (!td.ok) {
        out.message = "tree-decomposition invalid: " + td.violation->message;
        return out;
    }
    out.metrics = td.metrics;
    if (con.eta < 0 || con.eta > con.theta) {
        out.message = "require 0 <= eta <= theta";
        return out;
    }
    if (td.metrics.adhesion > con.theta) {
        out.message = "adhesion " + std::to_string(td.metrics.adhesion) +
                      " exceeds theta " + std::to_string(con.theta);
        return out;
    }
    const auto& root_bag = con.rtd.bag(con.rtd.root);
    if (static_cast<int>(root_bag.size()) > con.theta) {
        out.message = "root bag larger than theta";
        return out;
    }
    if (con.eta > 0 && root_bag.empty() && g.vertex_count() > 0) {
        out.message = "eta > 0 requires a nonempty root bag";
        return out;
    }
    auto children = con.rtd.children();
    for (int t = 0; t < con.rtd.node_count(); ++t) {
        int p = con.rtd.parent[t];
        if (p < 0) continue;
        VertexSet inter, extra;
        std::set_intersection(con.rtd.bag(t).begin(), con.rtd.bag(t).end(),
                              con.rtd.bag(p).begin(), con.rtd.bag(p).end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) <= con.eta) continue;
        std::set_difference(con.rtd.bag(t).begin(), con.rtd.bag(t).end(),
                            con.rtd.bag(p).begin(), con.rtd.bag(p).end(),
                            std::back_inserter(extra));
        if (!children[t].empty() || extra.size() > 1) {
            out.message = "edge (" + std::to_string(p) + "," + std::to_string(t) +
                          ") has adhesion above eta but is not a near-trivial leaf";
            return out;
        }
    }
    out.ok = true;
    return out;
}

Bound tw_base_bound(int w, int ell) {
    return bound_combine(2 * (w + 1), 1, ell, Bound(1));
}

Construction make_tw_construction(const Graph& g, RootedTreeDecomposition rtd,
                                  int w) {
    auto td = validate_td(g, rtd);
    if (!td.ok)
        throw ConstructionError("invalid tree-decomposition: " +
                                td.violation->message);
    if (td.metrics.width > w)
        throw ConstructionError("decomposition width " +
                                std::to_string(td.metrics.width) +
                                " exceeds requested w = " + std::to_string(w));
    const int theta = w + 1;
    Construction con;
    con.theta = theta;
    con.colorer_f = make_trivial_small_colorer(theta);
    con.colorer_fprime = make_vertex_cover_colorer(theta);

    if (g.vertex_count() == 0) {
        con.eta = 0;
        con.rtd.parent = {-1};
        con.rtd.root = 0;
        con.rtd.bags = {VertexSet{}};
        return con;
    }
    con.eta = theta;
    int t0 = -1;
    for (int t = 0; t < rtd.node_count() && t0 == -1; ++t)
        if (!rtd.bags[t].empty()) t0 = t;
    rtd.reroot(t0);
    int v0 = rtd.bags[t0].front();
    // fresh singleton-bag root above t0
    int fresh = rtd.node_count();
    rtd.parent.push_back(-1);
    rtd.bags.push_back(VertexSet{v0});
    rtd.parent[t0] = fresh;
    rtd.root = fresh;
    con.rtd = std::move(rtd);

    auto check = validate_construction(g, con);
    if (!check.ok)
        throw ConstructionError("construction invariants failed: " + check.message);
    return con;
}

}  // namespace wd
