#include "wd/tree_color.hpp"

#include <algorithm>
#include <cassert>

#include "wd/centered.hpp"
#include "wd/heuristic_td.hpp"

namespace wd {

namespace {

// Epoch-stamped map over vertex ids; clear() is O(1).
struct EpochMap {
    std::vector<int> val;
    std::vector<int> epoch;
    int cur = 0;

    void init(int n) {
        val.assign(n, 0);
        epoch.assign(n, 0);
        cur = 1;
    }
    void clear() { ++cur; }
    bool has(int v) const { return epoch[v] == cur; }
    int get(int v) const { return val[v]; }
    void set(int v, int x) {
        epoch[v] = cur;
        val[v] = x;
    }
};

struct UnionFind {
    std::vector<int> parent;
    void init(int n) {
        parent.resize(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);  // keep the smaller index as the root
        parent[b] = a;
    }
};

class Engine {
public:
    Engine(const Graph& g, const Construction& con, int ell, int m,
           const ColorOptions& opt)
        : g_(g), con_(con), ell_(ell), m_(m), opt_(opt) {
        const auto& rtd = con_.rtd;
        const int nodes = rtd.node_count();
        const int n = g_.vertex_count();

        // children CSR (ascending within each node)
        child_off_.assign(nodes + 1, 0);
        for (int t = 0; t < nodes; ++t)
            if (rtd.parent[t] >= 0) child_off_[rtd.parent[t] + 1]++;
        for (int t = 0; t < nodes; ++t) child_off_[t + 1] += child_off_[t];
        child_dat_.resize(child_off_[nodes]);
        {
            std::vector<int> fill(child_off_.begin(), child_off_.end() - 1);
            for (int t = 0; t < nodes; ++t)
                if (rtd.parent[t] >= 0) child_dat_[fill[rtd.parent[t]]++] = t;
        }

        // iterative Euler tour
        tin_.assign(nodes, 0);
        tout_.assign(nodes, 0);
        depth_.assign(nodes, 0);
        {
            int timer = 0;
            std::vector<std::pair<int, int>> stack{{rtd.root, 0}};
            while (!stack.empty()) {
                auto& [t, ci] = stack.back();
                if (ci == 0) {
                    tin_[t] = timer++;
                    depth_[t] = stack.size() > 1
                                    ? depth_[rtd.parent[t]] + 1
                                    : 0;
                }
                if (ci < child_off_[t + 1] - child_off_[t]) {
                    int c = child_dat_[child_off_[t] + ci];
                    ++ci;
                    stack.emplace_back(c, 0);
                } else {
                    tout_[t] = timer - 1;
                    stack.pop_back();
                }
            }
        }

        // per-vertex traces (CSR) and topmost trace node
        trace_off_.assign(n + 1, 0);
        for (int t = 0; t < nodes; ++t)
            for (int v : rtd.bags[t]) trace_off_[v + 1]++;
        for (int v = 0; v < n; ++v) trace_off_[v + 1] += trace_off_[v];
        trace_dat_.resize(trace_off_[n]);
        {
            std::vector<int> fill(trace_off_.begin(), trace_off_.end() - 1);
            for (int t = 0; t < nodes; ++t)
                for (int v : rtd.bags[t]) trace_dat_[fill[v]++] = t;
        }
        top_.assign(n, -1);
        for (int v = 0; v < n; ++v)
            for (int i = trace_off_[v]; i < trace_off_[v + 1]; ++i) {
                int t = trace_dat_[i];
                if (top_[v] == -1 || depth_[t] < depth_[top_[v]]) top_[v] = t;
            }

        // f* table from the declared base bounds
        Bound nb = con_.declared_n(ell_);
        Bound nf = con_.declared_n_fplus(ell_);
        parts_ = tree_extension_parts(con_.theta, ell_, nb, nf);
        fstar_.push_back(parts_.fstar0);
        for (int i = 1; i <= con_.eta; ++i) {
            Bound grown =
                Bound((14LL * con_.theta + 4) * ell_) +
                Bound(7LL * con_.theta * ell_ * ell_) *
                    tree_extension_f1(con_.theta, ell_, fstar_.back());
            fstar_.push_back(std::max(grown, parts_.fstar0));
        }

        color_.assign(n, 0);
        stamp_.assign(n, 0);
        z0_.init(n);
        ctx_.init(n);
        dist_.init(n);
        owner_.init(n);
        g0full_.init(n);
        g0min_.init(n);
    }

    const Bound& fstar(int eta) const { return fstar_[eta]; }

    Coloring run(const VertexSet& z, const std::vector<int>& c) {
        const int n = g_.vertex_count();
        for (int v : z) color_[v] = c[v];

        auto comps = components(g_);
        for (size_t i = 0; i < comps.size(); ++i)
            for (int v : comps[i]) stamp_[v] = static_cast<int>(i) + 1;

        if (con_.eta == 0) {
            for (const auto& comp : comps) eta0_component(comp);
        } else {
            for (size_t i = 0; i < comps.size(); ++i)
                enqueue_component(comps[i], static_cast<int>(i) + 1);
            while (!queue_.empty()) {
                Task tk = std::move(queue_.back());
                queue_.pop_back();
                process(tk);
            }
        }

        Coloring out;
        out.ell = ell_;
        out.m = m_;
        out.color = color_;
        for (int v = 0; v < n; ++v)
            if (out.color[v] == 0)
                throw TreeColorError("vertex " + std::to_string(v) +
                                     " left uncolored (bug)");
        return out;
    }

private:
    struct Task {
        int anchor;
        VertexSet root_bag;
        int stamp;
        int depth;
    };

    struct CutEdge {
        int tnode;
        int cnode;
        VertexSet xe;                    // cut restricted to the task domain
        std::vector<int> part_of;        // per xe index
        std::vector<VertexSet> parts;    // sorted by minimum member
        std::vector<int> gadget_color;   // per part, after the recursion
    };

    bool in_domain(int v, int stamp, int anchor) const {
        if (stamp_[v] != stamp) return false;
        int tv = top_[v];
        if (tin_[anchor] <= tin_[tv] && tin_[tv] <= tout_[anchor]) return true;
        return ctx_.has(v);  // v in bag(anchor), marked per context
    }

    void mark_anchor_bag(int anchor) {
        ctx_.clear();
        for (int v : con_.rtd.bags[anchor]) ctx_.set(v, 1);
    }

    // Multi-source labeled BFS; dist_/owner_ stay valid until the next run.
    template <typename Admit>
    void labeled_bfs(const std::vector<std::pair<int, int>>& seeds,
                     long long cap, Admit admit) {
        dist_.clear();
        owner_.clear();
        border_.clear();
        for (auto [v, lab] : seeds) {
            if (dist_.has(v)) continue;
            dist_.set(v, 0);
            owner_.set(v, lab);
            border_.push_back(v);
        }
        for (size_t head = 0; head < border_.size(); ++head) {
            int u = border_[head];
            int du = dist_.get(u);
            if (du >= cap) continue;
            for (int w : g_.neighbors(u)) {
                if (dist_.has(w) || !admit(w)) continue;
                dist_.set(w, du + 1);
                owner_.set(w, owner_.get(u));
                border_.push_back(w);
            }
        }
    }

    void enqueue_component(const VertexSet& comp, int stamp) {
        const auto& rtd = con_.rtd;
        VertexSet root_bag;
        for (int v : rtd.bags[rtd.root])
            if (stamp_[v] == stamp) root_bag.push_back(v);
        int anchor = rtd.root;
        if (root_bag.empty()) {
            // the root bag misses this component: re-anchor at the topmost
            // node meeting it, with a fresh singleton root bag
            int best = -1;
            for (int v : comp) {
                int t = top_[v];
                if (best == -1 || depth_[t] < depth_[best] ||
                    (depth_[t] == depth_[best] && t < best))
                    best = t;
            }
            anchor = best;
            for (int v : con_.rtd.bags[anchor])
                if (stamp_[v] == stamp) {
                    root_bag.push_back(v);
                    break;
                }
            for (int v : comp)
                if (color_[v] != 0)
                    throw TreeColorError(
                        "precolored vertex outside the root-bag component");
        }
        queue_.push_back(Task{anchor, std::move(root_bag), stamp, depth_[anchor]});
    }

    // eta = 0: by the construction invariants every component lies inside one
    // star of the decomposition, so the extended-bag colorer handles it whole.
    void eta0_component(const VertexSet& comp) {
        VertexSet rest;
        for (int v : comp)
            if (color_[v] == 0) rest.push_back(v);
        if (rest.empty()) return;
        // local induced subgraph without the O(n) id map of induced_subgraph;
        // graphs with many components would otherwise pay n per component
        g0min_.clear();
        for (size_t i = 0; i < rest.size(); ++i)
            g0min_.set(rest[i], static_cast<int>(i));
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < rest.size(); ++i)
            for (int w : g_.neighbors(rest[i]))
                if (rest[i] < w && g0min_.has(w))
                    edges.emplace_back(static_cast<int>(i), g0min_.get(w));
        Graph sub = Graph::build(static_cast<int>(rest.size()), edges);
        auto [col, bnd] = con_.colorer_fprime.color(sub, ell_, m_, {});
        if (opt_.debug_certify) {
            auto rep = certify(sub, col, con_.declared_n(ell_));
            if (!rep.pass)
                throw TreeColorError(
                    "base colorer exceeded its declared bound (bug)");
        }
        for (size_t i = 0; i < rest.size(); ++i) color_[rest[i]] = col.color[i];
    }

    void process(const Task& tk) {
        const auto& rtd = con_.rtd;

        // (1) saturate the precoloring on the 3*ell-ball of the root bag
        mark_anchor_bag(tk.anchor);
        auto dom = [&](int v) { return in_domain(v, tk.stamp, tk.anchor); };
        const auto& ball_order = bfs_.run(g_, tk.root_bag, 3LL * ell_, dom);
        z0_.clear();
        for (int v : ball_order) {
            z0_.set(v, 1);
            if (color_[v] == 0) color_[v] = m_;
        }

        // (2) core subtree: nodes whose bags meet the saturated set
        t0_nodes_.clear();
        cuts_.clear();
        auto qualifies = [&](int t) {
            for (int v : rtd.bags[t])
                if (z0_.has(v)) return true;
            return false;
        };
        t0_nodes_.push_back(tk.anchor);
        for (size_t head = 0; head < t0_nodes_.size(); ++head) {
            int t = t0_nodes_[head];
            for (int i = child_off_[t]; i < child_off_[t + 1]; ++i) {
                int cnode = child_dat_[i];
                if (qualifies(cnode)) {
                    t0_nodes_.push_back(cnode);
                    continue;
                }
                // cut edge: X_e = bag(t) ∩ bag(cnode), domain-restricted
                CutEdge e;
                e.tnode = t;
                e.cnode = cnode;
                const auto& bt = rtd.bags[t];
                for (int v : rtd.bags[cnode])
                    if (stamp_[v] == tk.stamp &&
                        std::binary_search(bt.begin(), bt.end(), v))
                        e.xe.push_back(v);
                if (e.xe.empty()) continue;  // empty piece (component invariant)
                cuts_.push_back(std::move(e));
            }
        }

        // (3) boundary partitions: meet-in-the-middle over one labeled BFS
        for (auto& e : cuts_) {
            mark_anchor_bag(e.cnode);
            auto pdom = [&](int v) { return in_domain(v, tk.stamp, e.cnode); };
            seeds_.clear();
            for (size_t i = 0; i < e.xe.size(); ++i)
                seeds_.emplace_back(e.xe[i], static_cast<int>(i));
            labeled_bfs(seeds_, 7LL * ell_, pdom);
            UnionFind uf;
            uf.init(static_cast<int>(e.xe.size()));
            const long long lim = 7LL * ell_;
            for (int u : border_) {
                long long du = dist_.get(u);
                for (int w : g_.neighbors(u)) {
                    if (!dist_.has(w)) continue;
                    if (du + dist_.get(w) + 1 <= lim)
                        uf.unite(owner_.get(u), owner_.get(w));
                }
            }
            std::vector<int> root_to_part(e.xe.size(), -1);
            e.part_of.resize(e.xe.size());
            for (size_t i = 0; i < e.xe.size(); ++i) {
                int r = uf.find(static_cast<int>(i));
                if (root_to_part[r] == -1) {
                    root_to_part[r] = static_cast<int>(e.parts.size());
                    e.parts.emplace_back();
                }
                e.part_of[i] = root_to_part[r];
                e.parts[e.part_of[i]].push_back(e.xe[i]);
            }
            e.gadget_color.assign(e.parts.size(), 0);
        }

        // (4) gadget graph of the core, stripped of the saturated set, and
        // the eta-1 recursion on it
        recurse_on_core(tk);

        // (5) buffer colors across each cut, then hand the piece over
        for (auto& e : cuts_) {
            mark_anchor_bag(e.cnode);
            auto pdom = [&](int v) { return in_domain(v, tk.stamp, e.cnode); };
            seeds_.clear();
            for (size_t i = 0; i < e.xe.size(); ++i)
                seeds_.emplace_back(e.xe[i], e.part_of[i]);
            labeled_bfs(seeds_, 3LL * ell_, pdom);
            for (int v : border_) {
                int d = dist_.get(v);
                if (d == 0) continue;  // the cut itself lives in the core
                assert(color_[v] == 0);
                if (d <= ell_)
                    color_[v] = e.gadget_color[owner_.get(v)];
                else if (d <= 2 * ell_)
                    color_[v] = 1;
                else
                    color_[v] = 2;
            }
            if (static_cast<int>(e.xe.size()) > con_.eta) {
                // near-trivial leaf: at most one vertex beyond the cut
                for (int v : rtd.bags[e.cnode])
                    if (stamp_[v] == tk.stamp && color_[v] == 0) color_[v] = 1;
            } else {
                assert(depth_[e.cnode] > tk.depth);
                queue_.push_back(
                    Task{e.cnode, e.xe, tk.stamp, depth_[e.cnode]});
            }
        }
    }

    void recurse_on_core(const Task& tk) {
        const auto& rtd = con_.rtd;

        // collect core vertices (sorted), split into saturated / remaining
        core_verts_.clear();
        g0full_.clear();
        for (int t : t0_nodes_)
            for (int v : rtd.bags[t]) {
                if (stamp_[v] != tk.stamp || g0full_.has(v)) continue;
                g0full_.set(v, 1);
                core_verts_.push_back(v);
            }
        std::sort(core_verts_.begin(), core_verts_.end());

        minus_verts_.clear();
        for (int v : core_verts_)
            if (!z0_.has(v)) minus_verts_.push_back(v);

        int n_gadgets = 0;
        for (const auto& e : cuts_) n_gadgets += static_cast<int>(e.parts.size());
        const int n_minus = static_cast<int>(minus_verts_.size()) + n_gadgets;
        if (n_minus == 0) {
            if (opt_.debug_certify) certify_core();
            return;
        }

        g0min_.clear();
        for (size_t i = 0; i < minus_verts_.size(); ++i)
            g0min_.set(minus_verts_[i], static_cast<int>(i));

        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < minus_verts_.size(); ++i) {
            int v = minus_verts_[i];
            for (int w : g_.neighbors(v))
                if (v < w && g0min_.has(w) && g0full_.has(w))
                    edges.emplace_back(static_cast<int>(i), g0min_.get(w));
        }
        int gid = static_cast<int>(minus_verts_.size());
        std::vector<std::pair<int, int>> gadget_ids;  // (cut index, part index)
        for (size_t ei = 0; ei < cuts_.size(); ++ei)
            for (size_t p = 0; p < cuts_[ei].parts.size(); ++p) {
                for (int y : cuts_[ei].parts[p])
                    if (g0min_.has(y)) edges.emplace_back(g0min_.get(y), gid);
                gadget_ids.emplace_back(static_cast<int>(ei), static_cast<int>(p));
                ++gid;
            }
        Graph sub = Graph::build(n_minus, edges);

        // local construction (T''',X''') over the stripped gadget graph
        RootedTreeDecomposition lt;
        const int n_t0 = static_cast<int>(t0_nodes_.size());
        // local node 0: conceptual root above the anchor (bag was inside the
        // saturated set, so its stripped bag is empty)
        lt.parent.assign(1 + n_t0 + n_gadgets, -1);
        lt.bags.assign(1 + n_t0 + n_gadgets, {});
        ++node_epoch2_;
        if (static_cast<int>(node_lid_.size()) < rtd.node_count()) {
            node_lid_.resize(rtd.node_count());
            node_lid_epoch_.assign(rtd.node_count(), 0);
        }
        auto set_lid = [&](int t, int lid) {
            node_lid_[t] = lid;
            node_lid_epoch_[t] = node_epoch2_;
        };
        auto lid_of = [&](int t) {
            if (node_lid_epoch_[t] != node_epoch2_)
                throw TreeColorError("core subtree walked out of order (bug)");
            return node_lid_[t];
        };
        lt.root = 0;
        for (int i = 0; i < n_t0; ++i) {
            int t = t0_nodes_[i];
            set_lid(t, i + 1);
            lt.parent[i + 1] = (t == tk.anchor) ? 0 : lid_of(rtd.parent[t]);
            VertexSet bag;
            for (int v : rtd.bags[t])
                if (g0min_.has(v)) bag.push_back(g0min_.get(v));
            std::sort(bag.begin(), bag.end());
            lt.bags[i + 1] = std::move(bag);
        }
        int lnode = 1 + n_t0;
        for (const auto& e : cuts_)
            for (const auto& part : e.parts) {
                lt.parent[lnode] = lid_of(e.tnode);
                VertexSet bag;
                for (int y : part)
                    if (g0min_.has(y)) bag.push_back(g0min_.get(y));
                bag.push_back(static_cast<int>(minus_verts_.size()) +
                              (lnode - 1 - n_t0));
                std::sort(bag.begin(), bag.end());
                lt.bags[lnode] = std::move(bag);
                ++lnode;
            }

        const int sub_eta = con_.eta - 1;
        if (sub_eta >= 1) {
            // thread a vertex from the closest nonempty stripped bag along
            // the path up to the conceptual root, then add a singleton root
            std::vector<int> ldepth(lt.parent.size(), 0);
            for (size_t i = 1; i < lt.parent.size(); ++i)
                ldepth[i] = ldepth[lt.parent[i]] + 1;
            int t0sel = -1;
            for (size_t i = 0; i < lt.parent.size(); ++i) {
                if (lt.bags[i].empty()) continue;
                if (t0sel == -1 || ldepth[i] < ldepth[t0sel]) t0sel = static_cast<int>(i);
            }
            if (t0sel == -1)
                throw TreeColorError("stripped core has vertices but no bag (bug)");
            int v0 = lt.bags[t0sel].front();
            for (int t = t0sel;; t = lt.parent[t]) {
                auto& bag = lt.bags[t];
                auto it = std::lower_bound(bag.begin(), bag.end(), v0);
                if (it == bag.end() || *it != v0) bag.insert(it, v0);
                if (t == 0) break;
            }
            int star = static_cast<int>(lt.parent.size());
            lt.parent.push_back(-1);
            lt.bags.push_back(VertexSet{v0});
            lt.parent[0] = star;
            lt.root = star;
        }

        Construction subcon;
        subcon.rtd = std::move(lt);
        subcon.eta = sub_eta;
        subcon.theta = con_.theta;
        subcon.colorer_f = con_.colorer_f;
        subcon.colorer_fprime = con_.colorer_fprime;

        TreeColorResult subres = color_construction(
            sub, subcon, ell_, m_, {}, std::vector<int>(n_minus, 0), opt_);

        for (size_t i = 0; i < minus_verts_.size(); ++i) {
            assert(color_[minus_verts_[i]] == 0);
            color_[minus_verts_[i]] = subres.coloring.color[i];
        }
        for (size_t k = 0; k < gadget_ids.size(); ++k) {
            auto [ei, p] = gadget_ids[k];
            cuts_[ei].gadget_color[p] =
                subres.coloring.color[minus_verts_.size() + k];
        }
        if (opt_.debug_certify) certify_core();
    }

    // Rebuilds the full core-plus-gadgets graph and checks the combined
    // coloring against the level bound f_1(f*(eta-1)).
    void certify_core() {
        std::vector<std::pair<int, int>> edges;
        // core_verts_ sorted; ids by position
        EpochMap full_id;
        full_id.init(g_.vertex_count());
        for (size_t i = 0; i < core_verts_.size(); ++i)
            full_id.set(core_verts_[i], static_cast<int>(i));
        for (size_t i = 0; i < core_verts_.size(); ++i) {
            int v = core_verts_[i];
            for (int w : g_.neighbors(v))
                if (v < w && full_id.has(w))
                    edges.emplace_back(static_cast<int>(i), full_id.get(w));
        }
        int n_full = static_cast<int>(core_verts_.size());
        Coloring c0;
        c0.ell = ell_;
        c0.m = m_;
        for (int v : core_verts_) c0.color.push_back(color_[v]);
        for (const auto& e : cuts_)
            for (size_t p = 0; p < e.parts.size(); ++p) {
                for (int y : e.parts[p]) edges.emplace_back(full_id.get(y), n_full);
                c0.color.push_back(e.gadget_color[p] ? e.gadget_color[p] : 1);
                ++n_full;
            }
        Graph g0 = Graph::build(n_full, edges);
        Bound level = tree_extension_f1(con_.theta, ell_, fstar_[con_.eta - 1]);
        auto rep = certify(g0, c0, level);
        if (!rep.pass)
            throw TreeColorError("core coloring exceeded f1(f*(eta-1)) (bug)");
    }

    const Graph& g_;
    const Construction& con_;
    int ell_, m_;
    ColorOptions opt_;

    std::vector<int> child_off_, child_dat_;
    std::vector<int> tin_, tout_, depth_;
    std::vector<int> trace_off_, trace_dat_;
    std::vector<int> top_;

    TreeExtensionParts parts_;
    std::vector<Bound> fstar_;

    std::vector<int> color_;
    std::vector<int> stamp_;

    BfsScratch bfs_;
    EpochMap z0_, ctx_, dist_, owner_, g0full_, g0min_;
    std::vector<int> node_lid_, node_lid_epoch_;
    int node_epoch2_ = 0;

    std::vector<Task> queue_;
    std::vector<int> t0_nodes_;
    std::vector<CutEdge> cuts_;
    std::vector<std::pair<int, int>> seeds_;
    std::vector<int> border_;
    std::vector<int> core_verts_, minus_verts_;
};

}  // namespace

TreeColorResult color_construction(const Graph& g, const Construction& con,
                                   int ell, int m, const VertexSet& z,
                                   const std::vector<int>& c,
                                   const ColorOptions& opt) {
    if (ell < 1) throw TreeColorError("scale must be >= 1");
    if (m < 2) throw TreeColorError("palette must have at least 2 colors");
    auto val = validate_construction(g, con);
    if (!val.ok) throw TreeColorError("construction invalid: " + val.message);
    if (!is_sorted_unique(z)) throw TreeColorError("Z not sorted/unique");

    const int n = g.vertex_count();
    std::vector<int> cfull = c;
    if (cfull.empty()) cfull.assign(n, 0);
    if (static_cast<int>(cfull.size()) != n)
        throw TreeColorError("precoloring must span all vertex ids");
    {
        std::vector<char> in_z(n, 0);
        for (int v : z) {
            if (v < 0 || v >= n) throw TreeColorError("Z vertex out of range");
            in_z[v] = 1;
        }
        for (int v = 0; v < n; ++v) {
            if (in_z[v]) {
                if (cfull[v] < 1 || cfull[v] > m)
                    throw TreeColorError("precoloring outside the palette");
            } else if (cfull[v] != 0) {
                throw TreeColorError("precoloring assigns a color outside Z");
            }
        }
    }
    if (!z.empty()) {
        BfsScratch bfs;
        bfs.attach(g);
        bfs.run(g, con.rtd.bags[con.rtd.root], 3LL * ell);
        for (int v : z)
            if (bfs.dist(v) == -1)
                throw TreeColorError(
                    "precolored set outside the 3*ell-ball of the root bag");
    }

    Engine eng(g, con, ell, m, opt);
    TreeColorResult res;
    res.coloring = eng.run(z, cfull);
    res.bound = eng.fstar(con.eta);

    for (int v : z)
        if (res.coloring.color[v] != cfull[v])
            throw TreeColorError("precoloring not preserved (bug)");
    if (opt.debug_certify) {
        auto rep = certify(g, res.coloring, res.bound);
        if (!rep.pass)
            throw TreeColorError("final certification failed (bug)");
    }
    return res;
}

std::vector<VertexSet> boundary_partition(const Graph& g_piece,
                                          const VertexSet& cut, int ell) {
    if (!is_sorted_unique(cut))
        throw TreeColorError("cut not sorted/unique");
    for (int v : cut)
        if (v < 0 || v >= g_piece.vertex_count())
            throw TreeColorError("cut vertex out of range");
    const long long lim = 7LL * ell;
    std::vector<int> dist(g_piece.vertex_count(), -1);
    std::vector<int> owner(g_piece.vertex_count(), -1);
    std::vector<int> order;
    for (size_t i = 0; i < cut.size(); ++i) {
        dist[cut[i]] = 0;
        owner[cut[i]] = static_cast<int>(i);
        order.push_back(cut[i]);
    }
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        if (dist[u] >= lim) continue;
        for (int w : g_piece.neighbors(u)) {
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            owner[w] = owner[u];
            order.push_back(w);
        }
    }
    UnionFind uf;
    uf.init(static_cast<int>(cut.size()));
    for (int u : order)
        for (int w : g_piece.neighbors(u))
            if (dist[w] != -1 && dist[u] + dist[w] + 1 <= lim)
                uf.unite(owner[u], owner[w]);
    std::vector<int> root_to_part(cut.size(), -1);
    std::vector<VertexSet> parts;
    for (size_t i = 0; i < cut.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        if (root_to_part[r] == -1) {
            root_to_part[r] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[root_to_part[r]].push_back(cut[i]);
    }
    return parts;
}

TwColorResult color_bounded_treewidth(
    const Graph& g, int ell, int w,
    const std::optional<RootedTreeDecomposition>& rtd_opt,
    const ColorOptions& opt) {
    if (w < 1) throw TreeColorError("w must be >= 1");
    RootedTreeDecomposition rtd = rtd_opt ? *rtd_opt : heuristic_td(g);
    auto val = validate_td(g, rtd);
    if (!val.ok)
        throw TreeColorError("invalid tree-decomposition: " +
                             val.violation->message);
    if (val.metrics.width > w)
        throw TreeColorError("decomposition width " +
                             std::to_string(val.metrics.width) +
                             " exceeds w = " + std::to_string(w));
    Construction con = make_tw_construction(g, std::move(rtd), w);
    auto res = color_construction(g, con, ell, 2,
                                  {}, std::vector<int>(g.vertex_count(), 0), opt);
    TwColorResult out;
    out.coloring = std::move(res.coloring);
    out.bound = res.bound;
    out.width = val.metrics.width;
    return out;
}

}  // namespace wd
