#include "wd/generators.hpp"

#include <algorithm>

namespace wd {

namespace {

using Edges = std::vector<std::pair<int, int>>;

RootedTreeDecomposition path_decomposition(int n) {
    RootedTreeDecomposition rtd;
    if (n <= 1) {
        rtd.parent = {-1};
        rtd.root = 0;
        rtd.bags = {n == 1 ? VertexSet{0} : VertexSet{}};
        return rtd;
    }
    rtd.parent.assign(n - 1, -1);
    rtd.bags.assign(n - 1, {});
    rtd.root = 0;
    for (int i = 0; i < n - 1; ++i) {
        rtd.bags[i] = {i, i + 1};
        if (i > 0) rtd.parent[i] = i - 1;
    }
    return rtd;
}

Generated gen_path(int n) {
    Generated out;
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    out.graph = Graph::build(n, e);
    out.rtd = path_decomposition(n);
    Layering ly;
    ly.layer.resize(n);
    for (int i = 0; i < n; ++i) ly.layer[i] = i;
    out.layering = std::move(ly);
    return out;
}

Generated gen_cycle(int n) {
    if (n < 3) throw GenError("cycle needs at least 3 vertices");
    Generated out;
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    out.graph = Graph::build(n, e);
    RootedTreeDecomposition rtd;
    rtd.parent.assign(n - 2, -1);
    rtd.bags.assign(n - 2, {});
    rtd.root = 0;
    for (int i = 0; i < n - 2; ++i) {
        rtd.bags[i] = {0, i + 1, i + 2};
        if (i > 0) rtd.parent[i] = i - 1;
    }
    out.rtd = std::move(rtd);
    return out;
}

// column path-decomposition + row layering; king adds the diagonals
Generated gen_grid(int rows, int cols, bool king, double keep, SplitMix64* rng) {
    if (rows < 1 || cols < 1) throw GenError("grid needs positive dimensions");
    Generated out;
    auto id = [cols](int r, int c) { return r * cols + c; };
    Edges e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto put = [&](int r2, int c2) {
                if (r2 < 0 || r2 >= rows || c2 < 0 || c2 >= cols) return;
                if (rng && rng->unit() > keep) return;
                e.emplace_back(id(r, c), id(r2, c2));
            };
            put(r, c + 1);
            put(r + 1, c);
            if (king) {
                put(r + 1, c + 1);
                put(r + 1, c - 1);
            }
        }
    out.graph = Graph::build(rows * cols, e);

    RootedTreeDecomposition rtd;
    int nodes = std::max(cols - 1, 1);
    rtd.parent.assign(nodes, -1);
    rtd.bags.assign(nodes, {});
    rtd.root = 0;
    for (int j = 0; j < nodes; ++j) {
        VertexSet bag;
        for (int r = 0; r < rows; ++r) {
            bag.push_back(id(r, j));
            if (cols > 1) bag.push_back(id(r, j + 1));
        }
        std::sort(bag.begin(), bag.end());
        rtd.bags[j] = std::move(bag);
        if (j > 0) rtd.parent[j] = j - 1;
    }
    out.rtd = std::move(rtd);

    Layering ly;
    ly.layer.resize(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) ly.layer[id(r, c)] = r;
    out.layering = std::move(ly);
    return out;
}

Generated gen_tree(int n, SplitMix64& rng) {
    Generated out;
    Edges e;
    std::vector<int> parent(std::max(n, 1), -1);
    for (int i = 1; i < n; ++i) {
        parent[i] = static_cast<int>(rng.below(i));
        e.emplace_back(parent[i], i);
    }
    out.graph = Graph::build(n, e);
    RootedTreeDecomposition rtd;
    rtd.parent.assign(std::max(n, 1), -1);
    rtd.bags.assign(std::max(n, 1), {});
    rtd.root = 0;
    rtd.bags[0] = n >= 1 ? VertexSet{0} : VertexSet{};
    for (int i = 1; i < n; ++i) {
        VertexSet bag{parent[i], i};
        std::sort(bag.begin(), bag.end());
        rtd.bags[i] = std::move(bag);
        rtd.parent[i] = parent[i];  // node i's bag shares parent[i] with node parent[i]
    }
    out.rtd = std::move(rtd);
    return out;
}

Generated gen_partial_ktree(int n, int k, double keep, SplitMix64& rng) {
    if (k < 1) throw GenError("partial_ktree needs k >= 1");
    if (n < 1) throw GenError("partial_ktree needs n >= 1");
    Generated out;
    const int base = std::min(n, k + 1);
    RootedTreeDecomposition rtd;
    Edges full;
    // base clique
    VertexSet first;
    for (int v = 0; v < base; ++v) first.push_back(v);
    for (int a = 0; a < base; ++a)
        for (int b = a + 1; b < base; ++b) full.emplace_back(a, b);
    rtd.parent.assign(1, -1);
    rtd.bags.assign(1, first);
    rtd.root = 0;
    // each new vertex joins a k-clique inside a recently created bag; the
    // window keeps the instances long and skinny (large diameter) instead of
    // collapsing into a small world
    constexpr std::uint64_t kWindow = 32;
    for (int v = base; v < n; ++v) {
        std::uint64_t span = std::min<std::uint64_t>(kWindow, rtd.bags.size());
        int host = static_cast<int>(rtd.bags.size() - 1 - rng.below(span));
        const VertexSet& hb = rtd.bags[host];
        int drop = static_cast<int>(rng.below(hb.size()));
        VertexSet bag;
        for (size_t i = 0; i < hb.size(); ++i)
            if (static_cast<int>(i) != drop) bag.push_back(hb[i]);
        for (int u : bag) full.emplace_back(u, v);
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        rtd.parent.push_back(host);
        rtd.bags.push_back(std::move(bag));
    }
    // drop edges to make it a partial k-tree; the decomposition stays valid
    Edges kept;
    for (auto& ed : full)
        if (rng.unit() <= keep) kept.push_back(ed);
    out.graph = Graph::build(n, kept);
    out.rtd = std::move(rtd);
    return out;
}

Generated gen_apexed(int rows, int cols, int apices, SplitMix64& rng) {
    (void)rng;
    Generated grid = gen_grid(rows, cols, false, 1.0, nullptr);
    const int base = rows * cols;
    Edges e = grid.graph.edges();
    for (int a = 0; a < apices; ++a) {
        int apex = base + a;
        for (int v = 0; v < base; ++v) e.emplace_back(v, apex);
        for (int b = 0; b < a; ++b) e.emplace_back(base + b, apex);
    }
    Generated out;
    out.graph = Graph::build(base + apices, e);
    out.rtd = std::move(grid.rtd);            // witness for graph - apices
    out.layering = std::move(grid.layering);  // ditto
    for (int a = 0; a < apices; ++a) out.apices.push_back(base + a);
    return out;
}

}  // namespace

Generated generate(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case GenSpec::kPath:
            return gen_path(spec.n);
        case GenSpec::kCycle:
            return gen_cycle(spec.n);
        case GenSpec::kGrid:
            return gen_grid(spec.rows, spec.cols, false, 1.0, nullptr);
        case GenSpec::kTree:
            return gen_tree(spec.n, rng);
        case GenSpec::kPartialKtree:
            return gen_partial_ktree(spec.n, spec.k, spec.keep, rng);
        case GenSpec::kLayeredRandom:
            return gen_grid(spec.rows, spec.cols, true, spec.keep, &rng);
        case GenSpec::kApexed:
            return gen_apexed(spec.rows, spec.cols, spec.k, rng);
    }
    throw GenError("unknown family");
}

GenSpec::Family family_from_name(const std::string& name) {
    if (name == "path") return GenSpec::kPath;
    if (name == "cycle") return GenSpec::kCycle;
    if (name == "grid") return GenSpec::kGrid;
    if (name == "tree") return GenSpec::kTree;
    if (name == "partial_ktree") return GenSpec::kPartialKtree;
    if (name == "layered_random") return GenSpec::kLayeredRandom;
    if (name == "apexed") return GenSpec::kApexed;
    throw GenError("unknown family: " + name);
}

}  // namespace wd
