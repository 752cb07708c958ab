#include <doctest.h>

#include "test_util.hpp"
#include "wd/construction.hpp"
#include "wd/generators.hpp"
#include "wd/heuristic_td.hpp"
#include "wd/layering.hpp"
#include "wd/tree_decomposition.hpp"

using namespace wd;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

// Naive axiom checker over every (vertex, edge, node) triple.
bool naive_td_ok(const Graph& g, const RootedTreeDecomposition& rtd) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (const auto& b : rtd.bags)
        for (int v : b) covered[v] = 1;
    for (char c : covered)
        if (!c) return false;
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& b : rtd.bags)
            ok = ok || (std::binary_search(b.begin(), b.end(), u) &&
                        std::binary_search(b.begin(), b.end(), v));
        if (!ok) return false;
    }
    // trace connectivity by BFS over tree edges restricted to the trace
    std::vector<std::vector<int>> adj(rtd.node_count());
    for (int t = 0; t < rtd.node_count(); ++t)
        if (rtd.parent[t] >= 0) {
            adj[t].push_back(rtd.parent[t]);
            adj[rtd.parent[t]].push_back(t);
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> trace;
        for (int t = 0; t < rtd.node_count(); ++t)
            if (std::binary_search(rtd.bags[t].begin(), rtd.bags[t].end(), v))
                trace.push_back(t);
        if (trace.empty()) return false;
        std::vector<char> in(rtd.node_count(), 0), seen(rtd.node_count(), 0);
        for (int t : trace) in[t] = 1;
        std::vector<int> stack{trace[0]};
        seen[trace[0]] = 1;
        size_t cnt = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (in[u] && !seen[u]) {
                    seen[u] = 1;
                    ++cnt;
                    stack.push_back(u);
                }
        }
        if (cnt != trace.size()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validate_td basics") {
    Graph p3 = path(3);
    RootedTreeDecomposition rtd;
    rtd.parent = {-1, 0};
    rtd.root = 0;
    rtd.bags = {{0, 1}, {1, 2}};
    auto val = validate_td(p3, rtd);
    REQUIRE(val.ok);
    CHECK(val.metrics.width == 1);
    CHECK(val.metrics.adhesion == 1);

    Graph one = Graph::build(1, {});
    RootedTreeDecomposition single;
    single.parent = {-1};
    single.root = 0;
    single.bags = {{0}};
    val = validate_td(one, single);
    REQUIRE(val.ok);
    CHECK(val.metrics.width == 0);
    CHECK(val.metrics.adhesion == 0);

    RootedTreeDecomposition bad;
    bad.parent = {-1, 0};
    bad.root = 0;
    bad.bags = {{0, 1}, {2}};
    val = validate_td(p3, bad);
    REQUIRE(!val.ok);
    CHECK(val.violation->kind == TdViolation::kEdgeUncovered);
    CHECK(val.violation->edge_u == 1);
    CHECK(val.violation->edge_v == 2);
}

TEST_CASE("validate_td catches disconnected traces") {
    Graph p3 = path(3);
    RootedTreeDecomposition rtd;
    rtd.parent = {-1, 0, 1};
    rtd.root = 0;
    rtd.bags = {{0, 1}, {1, 2}, {0}};  // vertex 0 in nodes {0,2}, not adjacent
    auto val = validate_td(p3, rtd);
    REQUIRE(!val.ok);
    CHECK(val.violation->kind == TdViolation::kTraceDisconnected);
    CHECK(val.violation->vertex == 0);
}

TEST_CASE("validate_td agrees with the naive checker") {
    SplitMix64 rng(99);
    int agree = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = wdtest::random_connected_graph(10, 4, seed);
        auto rtd = heuristic_td(g);
        // randomly corrupt half of them
        bool corrupt = seed % 2 == 0;
        if (corrupt && !rtd.bags.empty()) {
            int t = static_cast<int>(rng.below(rtd.node_count()));
            if (!rtd.bags[t].empty()) rtd.bags[t].erase(rtd.bags[t].begin());
        }
        bool ours = validate_td(g, rtd).ok;
        bool naive = naive_td_ok(g, rtd);
        CHECK(ours == naive);
        agree += (ours == naive);
    }
    CHECK(agree == 40);
}

TEST_CASE("layering validation and layered width") {
    Graph p4 = path(4);
    Layering ly{{0, 1, 2, 3}};
    CHECK(validate_layering(p4, ly).ok);
    Layering flat{{0, 0, 0, 0}};
    CHECK(validate_layering(p4, flat).ok);

    Graph e1 = Graph::build(2, {{0, 1}});
    Layering skip{{0, 2}};
    auto lv = validate_layering(e1, skip);
    REQUIRE(!lv.ok);
    CHECK(lv.violating_edge == std::pair<int, int>{0, 1});

    RootedTreeDecomposition rtd;
    rtd.parent = {-1, 0, 1};
    rtd.root = 0;
    rtd.bags = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(layered_width(p4, rtd, ly) == 1);

    RootedTreeDecomposition big;
    big.parent = {-1};
    big.root = 0;
    big.bags = {{0, 1, 2, 3}};
    CHECK(layered_width(p4, big, flat) == 4);

    // 3x3 grid: column path-decomposition x row layering
    GenSpec spec;
    spec.family = GenSpec::kGrid;
    spec.rows = spec.cols = 3;
    auto gen = generate(spec);
    CHECK(layered_width(gen.graph, *gen.rtd, *gen.layering) == 2);
}

TEST_CASE("heuristic_td is exact below 12 vertices") {
    // trees have width 1
    GenSpec spec;
    spec.family = GenSpec::kTree;
    spec.n = 8;
    spec.seed = 3;
    auto tree = generate(spec);
    auto rtd = heuristic_td(tree.graph);
    auto val = validate_td(tree.graph, rtd);
    REQUIRE(val.ok);
    CHECK(val.metrics.width == 1);

    // K4 forces one bag
    Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    val = validate_td(k4, heuristic_td(k4));
    REQUIRE(val.ok);
    CHECK(val.metrics.width == 3);

    // C5 has tree-width 2
    GenSpec c5;
    c5.family = GenSpec::kCycle;
    c5.n = 5;
    val = validate_td(generate(c5).graph, heuristic_td(generate(c5).graph));
    REQUIRE(val.ok);
    CHECK(val.metrics.width == 2);

    CHECK_THROWS_AS(heuristic_td(k4, 2), HeuristicError);
}

TEST_CASE("heuristic width vs exhaustive elimination oracle") {
    // independent oracle: all n! elimination orders on <= 7 vertices
    auto exhaustive_tw = [](const Graph& g) {
        std::vector<int> order(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
        int best = g.vertex_count();
        do {
            auto rtd = td_from_elimination_order(g, order);
            best = std::min(best, td_metrics(rtd).width);
        } while (std::next_permutation(order.begin(), order.end()));
        return best;
    };
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = wdtest::random_graph(6, 0.35, seed);
        auto rtd = heuristic_td(g);
        auto val = validate_td(g, rtd);
        REQUIRE(val.ok);
        CHECK(val.metrics.width == exhaustive_tw(g));
        CHECK(exact_treewidth(g) == exhaustive_tw(g));
    }
}

TEST_CASE("make_tw_construction") {
    Graph p4 = path(4);
    RootedTreeDecomposition rtd;
    rtd.parent = {-1, 0, 1};
    rtd.root = 0;
    rtd.bags = {{0, 1}, {1, 2}, {2, 3}};
    auto con = make_tw_construction(p4, rtd, 1);
    CHECK(con.theta == 2);
    CHECK(con.eta == 2);
    CHECK(con.rtd.bags[con.rtd.root].size() == 1);
    CHECK(validate_construction(p4, con).ok);

    Graph one = Graph::build(1, {});
    RootedTreeDecomposition single;
    single.parent = {-1};
    single.root = 0;
    single.bags = {{0}};
    auto con1 = make_tw_construction(one, single, 1);
    CHECK(con1.rtd.bags[con1.rtd.root] == VertexSet{0});

    // random partial 3-tree on 50 vertices through the heuristic
    GenSpec spec;
    spec.family = GenSpec::kPartialKtree;
    spec.n = 50;
    spec.k = 3;
    spec.seed = 7;
    auto gen = generate(spec);
    auto hrtd = heuristic_td(gen.graph);
    auto width = validate_td(gen.graph, hrtd).metrics.width;
    auto con50 = make_tw_construction(gen.graph, hrtd, std::max(width, 3));
    CHECK(validate_construction(gen.graph, con50).ok);

    CHECK_THROWS_AS(make_tw_construction(p4, rtd, 0), ConstructionError);
}

TEST_CASE("construction invariant checks") {
    Graph p4 = path(4);
    Construction con;
    con.eta = 1;
    con.theta = 1;
    con.colorer_f = make_trivial_small_colorer(2);
    con.colorer_fprime = make_vertex_cover_colorer(2);
    con.rtd.parent = {-1, 0, 1};
    con.rtd.root = 0;
    con.rtd.bags = {{0, 1}, {1, 2}, {2, 3}};
    // adhesion 1 <= theta, but bags have 2 vertices: width fine; root bag 2 > theta
    auto val = validate_construction(p4, con);
    CHECK(!val.ok);
    con.theta = 2;
    con.eta = 2;
    val = validate_construction(p4, con);
    CHECK(val.ok);

    // eta > 0 with empty root bag
    Construction bad = con;
    bad.rtd.bags = {{}, {0, 1, 2}, {2, 3}};
    auto bval = validate_construction(p4, bad);
    CHECK(!bval.ok);
    CHECK(bval.message == "eta > 0 requires a nonempty root bag");
}

TEST_CASE("generators emit valid witnesses") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        GenSpec spec;
        spec.family = GenSpec::kPartialKtree;
        spec.n = 60;
        spec.k = 2;
        spec.seed = seed;
        auto gen = generate(spec);
        auto val = validate_td(gen.graph, *gen.rtd);
        REQUIRE(val.ok);
        CHECK(val.metrics.width <= 2);
        // determinism
        auto gen2 = generate(spec);
        CHECK(gen.graph == gen2.graph);
    }
    GenSpec lr;
    lr.family = GenSpec::kLayeredRandom;
    lr.rows = 8;
    lr.cols = 9;
    lr.seed = 4;
    auto gen = generate(lr);
    REQUIRE(validate_td(gen.graph, *gen.rtd).ok);
    REQUIRE(validate_layering(gen.graph, *gen.layering).ok);
    CHECK(layered_width(gen.graph, *gen.rtd, *gen.layering) <= 2);
}
