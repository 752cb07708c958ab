#include "wd/coloring.hpp"

#include <algorithm>
#include <thread>

namespace wd {

void Coloring::check(const Graph& g) const {
    if (ell < 1) throw ColoringError("scale must be >= 1");
    if (m < 1) throw ColoringError("palette must be >= 1");
    if (static_cast<int>(color.size()) != g.vertex_count())
        throw ColoringError("coloring size != vertex count");
    for (int c : color)
        if (c < 1 || c > m) throw ColoringError("color out of palette");
}

std::vector<MonoComponent> mono_components(const Graph& g, const Coloring& c) {
    c.check(g);
    const int n = g.vertex_count();
    const int ell = c.ell;
    std::vector<MonoComponent> out;
    std::vector<int> assigned(n, -1);
    // best remaining budget seen per vertex within the current component's
    // expansion; a vertex is re-expanded only with a strictly larger budget.
    std::vector<int> budget(n, -1);
    std::vector<int> touched;
    std::vector<std::pair<int, int>> queue;  // (vertex, remaining budget)

    for (int seed = 0; seed < n; ++seed) {
        if (assigned[seed] != -1) continue;
        const int cid = static_cast<int>(out.size());
        const int col = c.color[seed];
        MonoComponent comp;
        comp.color = col;

        queue.clear();
        for (int v : touched) budget[v] = -1;
        touched.clear();

        assigned[seed] = cid;
        comp.vertices.push_back(seed);
        budget[seed] = ell;
        touched.push_back(seed);
        queue.emplace_back(seed, ell);

        for (size_t head = 0; head < queue.size(); ++head) {
            auto [u, b] = queue[head];
            if (budget[u] > b) continue;  // stale entry
            if (b == 0) continue;
            for (int w : g.neighbors(u)) {
                int nb = b - 1;
                if (assigned[w] == -1 && c.color[w] == col) {
                    assigned[w] = cid;
                    comp.vertices.push_back(w);
                    if (budget[w] < ell) {
                        if (budget[w] == -1) touched.push_back(w);
                        budget[w] = ell;
                        queue.emplace_back(w, ell);
                    }
                } else if (budget[w] < nb) {
                    if (budget[w] == -1) touched.push_back(w);
                    budget[w] = nb;
                    queue.emplace_back(w, nb);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// One BFS per member, each stopped as soon as every member has been seen (or
// the hop cap is exceeded), with all working memory reused across calls.
struct WdScratch {
    std::vector<int> dist;
    std::vector<int> order;
    std::vector<int> member_epoch;
    int epoch = 0;

    void attach(int n) {
        if (static_cast<int>(dist.size()) < n) {
            dist.assign(n, -1);
            member_epoch.assign(n, 0);
        }
    }

    WeakDiameter measure(const Graph& g, int ell, const VertexSet& s,
                         int cap_hops) {
        WeakDiameter out;
        out.witness = {s[0], s[0]};
        if (s.size() == 1) return out;
        attach(g.vertex_count());
        ++epoch;
        for (int v : s) member_epoch[v] = epoch;
        const long long cap_g =
            cap_hops < 0 ? std::numeric_limits<long long>::max()
                         : static_cast<long long>(cap_hops) * ell;

        long long best = 0;
        std::pair<int, int> pair{s[0], s[0]};
        for (int v : s) {
            order.clear();
            dist[v] = 0;
            order.push_back(v);
            size_t found = 1;
            long long far = 0;
            int far_v = v;
            size_t head = 0;
            for (; head < order.size() && found < s.size(); ++head) {
                int u = order[head];
                if (dist[u] > cap_g) break;
                for (int w : g.neighbors(u)) {
                    if (dist[w] != -1) continue;
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                    if (member_epoch[w] == epoch) {
                        ++found;
                        if (dist[w] > far) {
                            far = dist[w];
                            far_v = w;
                        }
                    }
                }
            }
            bool complete = found == s.size();
            int missing = -1;
            if (!complete)
                for (int u : s)
                    if (dist[u] == -1 || dist[u] > cap_g) {
                        missing = u;
                        break;
                    }
            for (int u : order) dist[u] = -1;
            if (!complete) {
                // either a true infinite diameter or a capped search
                if (cap_hops < 0) {
                    out.power_hops = kInfDist;
                    out.g_hops = -1;
                    out.witness = {v, missing};
                } else {
                    out.power_hops = cap_hops + 1;
                    out.g_hops = cap_g + 1;
                    out.witness = {v, missing};
                    out.truncated = true;
                }
                return out;
            }
            if (far > best) {
                best = far;
                pair = {v, far_v};
            }
        }
        out.g_hops = best;
        out.power_hops = static_cast<int>((best + ell - 1) / ell);
        out.witness = pair;
        return out;
    }
};

}  // namespace

WeakDiameter weak_diameter_power(const Graph& g, int ell, const VertexSet& s,
                                 int cap_hops) {
    if (s.empty()) throw ColoringError("weak diameter of empty set");
    if (ell < 1) throw ColoringError("scale must be >= 1");
    WdScratch scratch;
    return scratch.measure(g, ell, s, cap_hops);
}

CertificateReport certify(const Graph& g, const Coloring& c, const Bound& bound,
                          bool in_g_hops, int threads, bool truncate_at_bound) {
    CertificateReport rep;
    rep.bound_claimed = bound;
    rep.in_g_hops = in_g_hops;
    auto comps = mono_components(g, c);
    rep.components.resize(comps.size());

    int cap_hops = -1;
    if (truncate_at_bound) {
        // anything beyond the claimed bound fails regardless of how far
        Bound capped = in_g_hops ? bound / std::max(c.ell, 1) + 1 : bound;
        cap_hops = static_cast<int>(
            std::min<std::int64_t>(bound_to_i64_saturating(capped),
                                   g.vertex_count() + 1));
    }

    auto measure = [&](size_t i, WdScratch& scratch) {
        const auto& mc = comps[i];
        ComponentRecord rec;
        rec.color = mc.color;
        rec.size = static_cast<int>(mc.vertices.size());
        WeakDiameter wd = scratch.measure(g, c.ell, mc.vertices, cap_hops);
        rec.wd_power = wd.power_hops;
        rec.wd_g = wd.g_hops;
        rec.witness = wd.witness;
        rec.truncated = wd.truncated;
        rep.components[i] = rec;
    };

    if (threads <= 1 || comps.size() < 2) {
        WdScratch scratch;
        for (size_t i = 0; i < comps.size(); ++i) measure(i, scratch);
    } else {
        const int nw = std::min<int>(threads, static_cast<int>(comps.size()));
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&, w] {
                WdScratch scratch;
                for (size_t i = w; i < comps.size(); i += nw) measure(i, scratch);
            });
        for (auto& t : pool) t.join();
    }

    rep.pass = true;
    long long worst_val = -1;
    for (size_t i = 0; i < rep.components.size(); ++i) {
        const auto& rec = rep.components[i];
        long long val;
        bool infinite = rec.wd_power == kInfDist;
        val = in_g_hops ? rec.wd_g : rec.wd_power;
        if (infinite || Bound(val) > bound) rep.pass = false;
        long long rank = infinite ? std::numeric_limits<long long>::max() : val;
        if (rank > worst_val) {
            worst_val = rank;
            rep.worst = static_cast<int>(i);
        }
    }
    return rep;
}

CoverFamily coloring_to_cover(const Graph& g, const Coloring& c) {
    CoverFamily cf;
    cf.ell = c.ell;
    cf.families.resize(c.m);
    for (auto& mc : mono_components(g, c))
        cf.families[mc.color - 1].push_back(std::move(mc.vertices));
    return cf;
}

Coloring cover_to_coloring(const Graph& g, const CoverFamily& cf, int m) {
    const int fam = static_cast<int>(cf.families.size());
    Coloring c;
    c.ell = cf.ell;
    c.m = m > 0 ? m : std::max(fam, 1);
    if (c.m < fam) throw ColoringError("palette smaller than family count");
    c.color.assign(g.vertex_count(), 0);
    for (int i = fam - 1; i >= 0; --i)
        for (const auto& x : cf.families[i])
            for (int v : x) c.color[v] = i + 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] == 0)
            throw ColoringError("cover incomplete: vertex " + std::to_string(v) +
                                " uncovered");

    // Prop 3.1 containment: each monochromatic component of the result sits
    // inside one set of its family.
    std::vector<char> in_set(g.vertex_count(), 0);
    for (const auto& mc : mono_components(g, c)) {
        bool contained = false;
        for (const auto& x : cf.families[mc.color - 1]) {
            if (x.size() < mc.vertices.size()) continue;
            for (int v : x) in_set[v] = 1;
            contained = std::all_of(mc.vertices.begin(), mc.vertices.end(),
                                    [&](int v) { return in_set[v]; });
            for (int v : x) in_set[v] = 0;
            if (contained) break;
        }
        if (!contained)
            throw ColoringError(
                "cover violates the separation property: a monochromatic "
                "component crosses sets of one family");
    }
    return c;
}

CoverValidation validate_cover(const Graph& g, const CoverFamily& cf) {
    CoverValidation out;
    std::vector<char> covered(g.vertex_count(), 0);
    for (const auto& family : cf.families)
        for (const auto& x : family)
            for (int v : x) {
                if (v < 0 || v >= g.vertex_count()) {
                    out.message = "vertex id out of range";
                    return out;
                }
                covered[v] = 1;
            }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) {
            out.message = "vertex " + std::to_string(v) + " uncovered";
            return out;
        }
    // pairwise separation within each family
    BfsScratch bfs;
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < cf.families.size(); ++i) {
        const auto& family = cf.families[i];
        for (size_t a = 0; a < family.size(); ++a)
            for (int v : family[a]) {
                if (owner[v] != -1 && owner[v] != static_cast<int>(a)) {
                    out.message = "family " + std::to_string(i + 1) +
                                  " has overlapping sets";
                    for (const auto& x : family)
                        for (int u : x) owner[u] = -1;
                    return out;
                }
                owner[v] = static_cast<int>(a);
            }
        for (size_t a = 0; a < family.size(); ++a) {
            const auto& order = bfs.run(g, family[a], cf.ell);
            for (int u : order)
                if (owner[u] != -1 && owner[u] != static_cast<int>(a)) {
                    out.message = "family " + std::to_string(i + 1) +
                                  ": sets at distance <= ell";
                    for (const auto& x : family)
                        for (int v : x) owner[v] = -1;
                    return out;
                }
        }
        for (const auto& x : family)
            for (int v : x) owner[v] = -1;
    }
    out.ok = true;
    return out;
}

}  // namespace wd
