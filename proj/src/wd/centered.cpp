#include "wd/centered.hpp"

#include <algorithm>

namespace wd {

VertexSet ball(const Graph& g, const VertexSet& s, long long r) {
    BfsScratch bfs;
    VertexSet out(bfs.run(g, s, r));
    std::sort(out.begin(), out.end());
    return out;
}

bool witness_certifies(const Graph& g, const VertexSet& z,
                       const CenteredWitness& w) {
    if (static_cast<int>(w.centers.size()) > w.k) return false;
    BfsScratch bfs;
    bfs.attach(g);
    bfs.run(g, w.centers, w.radius);
    return std::all_of(z.begin(), z.end(),
                       [&](int v) { return bfs.dist(v) != -1; });
}

CombineResult combine_centered(const Graph& g, int ell, int m,
                               const VertexSet& z, const CenteredWitness& w,
                               const std::vector<int>& c_z,
                               const std::vector<int>& c_rest,
                               const std::optional<Bound>& n_supplied) {
    if (!is_sorted_unique(z)) throw CenteredError("Z not sorted/unique");
    if (!witness_certifies(g, z, w))
        throw CenteredError("witness does not certify Z (Z not in the ball)");
    const int n = g.vertex_count();
    if (static_cast<int>(c_z.size()) != n || static_cast<int>(c_rest.size()) != n)
        throw CenteredError("partial colorings must span all vertex ids");

    std::vector<char> in_z(n, 0);
    for (int v : z) in_z[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_z[v]) {
            if (c_z[v] < 1 || c_z[v] > m)
                throw CenteredError("c_Z not within palette on Z");
            if (c_rest[v] != 0)
                throw CenteredError("c_rest assigns a color inside Z");
        } else {
            if (c_rest[v] < 1 || c_rest[v] > m)
                throw CenteredError("c_rest not within palette on V-Z");
            if (c_z[v] != 0) throw CenteredError("c_Z assigns a color outside Z");
        }
    }

    Bound n_used;
    if (n_supplied) {
        n_used = *n_supplied;
    } else {
        // Measure the exact weak diameter of c_rest on (g-Z)^ell.
        VertexSet rest;
        rest.reserve(n - z.size());
        for (int v = 0; v < n; ++v)
            if (!in_z[v]) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        Coloring cr;
        cr.ell = ell;
        cr.m = m;
        cr.color.resize(rest.size());
        for (size_t i = 0; i < rest.size(); ++i) cr.color[i] = c_rest[rest[i]];
        long long worst = 0;
        for (const auto& mc : mono_components(sub.graph, cr))
            worst = std::max(
                worst,
                static_cast<long long>(
                    weak_diameter_power(sub.graph, ell, mc.vertices).power_hops));
        n_used = worst;
        if (n_used < 1) n_used = 1;  // the recurrence expects N >= 1
    }

    CombineResult out;
    out.n_used = n_used;
    out.bound = bound_combine(w.k, w.radius, ell, n_used);
    out.coloring.ell = ell;
    out.coloring.m = m;
    out.coloring.color.resize(n);
    for (int v = 0; v < n; ++v) out.coloring.color[v] = in_z[v] ? c_z[v] : c_rest[v];
    return out;
}

VertexSet vertex_cover_2approx(const Graph& g) {
    std::vector<char> matched(g.vertex_count(), 0);
    VertexSet cover;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (matched[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v < u || matched[v]) continue;
            matched[u] = matched[v] = 1;
            cover.push_back(u);
            cover.push_back(v);
            break;
        }
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

CoveredResult color_covered(const Graph& g, int ell, int m,
                            const std::vector<int>& precoloring) {
    if (!precoloring.empty() &&
        static_cast<int>(precoloring.size()) != g.vertex_count())
        throw CenteredError("precoloring must span all vertex ids");
    CoveredResult out;
    VertexSet cover = vertex_cover_2approx(g);
    out.cover_size = static_cast<int>(cover.size());
    out.bound = bound_combine(out.cover_size, 1, ell, Bound(1));
    out.coloring.ell = ell;
    out.coloring.m = m;
    out.coloring.color.assign(g.vertex_count(), 1);
    for (size_t v = 0; v < precoloring.size(); ++v) {
        if (precoloring[v] == 0) continue;
        if (precoloring[v] < 1 || precoloring[v] > m)
            throw CenteredError("precoloring outside palette");
        out.coloring.color[v] = precoloring[v];
    }
    return out;
}

ApexResult color_with_apices(const Graph& g, const VertexSet& z, int ell, int m,
                             const BaseColorer& base) {
    if (!is_sorted_unique(z)) throw CenteredError("apex set not sorted/unique");
    VertexSet rest;
    rest.reserve(g.vertex_count() - z.size());
    {
        std::vector<char> in_z(g.vertex_count(), 0);
        for (int v : z) in_z[v] = 1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_z[v]) rest.push_back(v);
    }
    auto sub = induced_subgraph(g, rest);
    auto [base_coloring, base_bound] = base(sub.graph);
    if (base_coloring.m > m)
        throw CenteredError("base colorer exceeds the requested palette");

    std::vector<int> c_z(g.vertex_count(), 0), c_rest(g.vertex_count(), 0);
    for (int v : z) c_z[v] = 1;
    for (size_t i = 0; i < rest.size(); ++i)
        c_rest[rest[i]] = base_coloring.color[i];

    CenteredWitness w{z, 0, static_cast<int>(z.size())};
    auto combined = combine_centered(g, ell, m, z, w, c_z, c_rest);
    ApexResult out;
    out.coloring = std::move(combined.coloring);
    out.bound = combined.bound;
    out.base_bound = combined.n_used;
    return out;
}

}  // namespace wd
