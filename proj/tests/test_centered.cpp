#include <doctest.h>

#include "test_util.hpp"
#include "wd/centered.hpp"

using namespace wd;

namespace {
Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}
}  // namespace

TEST_CASE("ball") {
    Graph p5 = path(5);
    CHECK(ball(p5, {2}, 1) == VertexSet{1, 2, 3});
    CHECK(ball(p5, {2}, 0) == VertexSet{2});
    CHECK(ball(p5, {}, 5) == VertexSet{});
}

TEST_CASE("combine_centered keeps every input color") {
    Graph p5 = path(5);
    // Z={2} with S={2}, r=0; rest colored all-1 (two halves), measured N=1
    VertexSet z{2};
    CenteredWitness w{{2}, 0, 1};
    std::vector<int> cz(5, 0), crest(5, 0);
    cz[2] = 1;
    for (int v : {0, 1, 3, 4}) crest[v] = 1;
    auto res = combine_centered(p5, 1, 2, z, w, cz, crest);
    CHECK(res.coloring.color == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(res.n_used == 1);
    CHECK(res.bound == bound_combine(1, 0, 1, Bound(1)));
    CHECK(res.bound == 4);
    // measured weak diameter of the union on P5 is 4 <= 4
    auto rep = certify(p5, res.coloring, res.bound);
    CHECK(rep.pass);
    CHECK(rep.worst_wd() == 4);

    // empty Z: bound equals N
    auto res2 = combine_centered(p5, 1, 2, {}, CenteredWitness{{}, 3, 0},
                                 std::vector<int>(5, 0),
                                 std::vector<int>{1, 1, 2, 1, 1});
    CHECK(res2.bound == res2.n_used);
    CHECK(res2.coloring.color == std::vector<int>{1, 1, 2, 1, 1});
}

TEST_CASE("combine_centered errors") {
    Graph p5 = path(5);
    VertexSet z{0, 4};
    CenteredWitness bad{{0}, 1, 1};  // vertex 4 outside the ball
    std::vector<int> cz(5, 0), crest(5, 0);
    cz[0] = cz[4] = 1;
    for (int v : {1, 2, 3}) crest[v] = 1;
    CHECK_THROWS_AS(combine_centered(p5, 1, 2, z, bad, cz, crest),
                    CenteredError);
    CenteredWitness ok{{0, 4}, 0, 2};
    cz[4] = 3;  // outside palette m=2
    CHECK_THROWS_AS(combine_centered(p5, 1, 2, z, ok, cz, crest),
                    CenteredError);
}

TEST_CASE("combine_centered randomized against certify") {
    int runs = 0;
    for (std::uint64_t seed = 1; runs < 200; ++seed) {
        SplitMix64 rng(seed);
        int n = 6 + static_cast<int>(rng.below(55));
        Graph g = wdtest::random_graph(n, 2.2 / n, seed * 13);
        int k = 1 + static_cast<int>(rng.below(4));
        int r = static_cast<int>(rng.below(4));
        int ell = 1 + static_cast<int>(rng.below(3));
        int m = 2 + static_cast<int>(rng.below(2));
        VertexSet s;
        for (int i = 0; i < k; ++i) s.push_back(static_cast<int>(rng.below(n)));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        VertexSet reach = ball(g, s, r);
        VertexSet z;
        for (int v : reach)
            if (rng.unit() < 0.6) z.push_back(v);
        std::vector<int> cz(n, 0), crest(n, 0);
        std::vector<char> in_z(n, 0);
        for (int v : z) {
            in_z[v] = 1;
            cz[v] = 1 + static_cast<int>(rng.below(m));  // adversarial
        }
        for (int v = 0; v < n; ++v)
            if (!in_z[v]) crest[v] = 1 + static_cast<int>(rng.below(m));
        CenteredWitness w{s, r, k};
        auto res = combine_centered(g, ell, m, z, w, cz, crest);
        // union semantics: inputs never recolored
        for (int v = 0; v < n; ++v)
            CHECK(res.coloring.color[v] == (in_z[v] ? cz[v] : crest[v]));
        auto rep = certify(g, res.coloring, res.bound);
        CHECK(rep.pass);
        ++runs;
    }
}

TEST_CASE("vertex_cover_2approx") {
    Graph p4 = path(4);
    CHECK(vertex_cover_2approx(p4) == VertexSet{0, 1, 2, 3});
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(vertex_cover_2approx(star) == VertexSet{0, 1});
    CHECK(vertex_cover_2approx(Graph::build(5, {})) == VertexSet{});
    // always a cover
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = wdtest::random_graph(14, 0.2, seed);
        auto cover = vertex_cover_2approx(g);
        std::vector<char> in(14, 0);
        for (int v : cover) in[v] = 1;
        for (auto [u, v] : g.edges()) CHECK((in[u] || in[v]));
    }
}

TEST_CASE("color_covered certifies for adversarial precolorings") {
    Graph k15 = Graph::build(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto res = color_covered(k15, 1, 2, {});
    CHECK(res.coloring.color == std::vector<int>(6, 1));
    CHECK(certify(k15, res.coloring, res.bound).pass);

    Graph p4 = path(4);
    std::vector<int> pre(4, 0);
    pre[0] = 2;
    auto res2 = color_covered(p4, 2, 2, pre);
    CHECK(res2.coloring.color[0] == 2);
    CHECK(certify(p4, res2.coloring, res2.bound).pass);

    Graph edgeless = Graph::build(10, {});
    auto res3 = color_covered(edgeless, 3, 2, {});
    auto rep = certify(edgeless, res3.coloring, res3.bound);
    CHECK(rep.pass);
    CHECK(rep.worst_wd() == 0);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        SplitMix64 rng(seed);
        int n = 2 + static_cast<int>(rng.below(39));
        Graph g = wdtest::random_graph(n, 2.0 / n, seed * 5);
        int ell = 1 + static_cast<int>(rng.below(3));
        int m = 1 + static_cast<int>(rng.below(3));
        std::vector<int> adversarial(n, 0);
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.5) adversarial[v] = 1 + static_cast<int>(rng.below(m));
        auto r = color_covered(g, ell, m, adversarial);
        CHECK(certify(g, r.coloring, r.bound).pass);
    }
}

TEST_CASE("color_with_apices") {
    // K_n with all but one vertex as apices
    Graph k5 = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    VertexSet z{1, 2, 3, 4};
    auto base = [](const Graph& sub) {
        Coloring c;
        c.ell = 1;
        c.m = 2;
        c.color.assign(sub.vertex_count(), 1);
        return std::make_pair(c, Bound(1));
    };
    auto res = color_with_apices(k5, z, 1, 2, base);
    CHECK(certify(k5, res.coloring, res.bound).pass);
    for (int v : z) CHECK(res.coloring.color[v] == 1);

    // empty apex set: base output unchanged
    Graph p4 = path(4);
    auto base2 = [](const Graph& sub) {
        Coloring c;
        c.ell = 1;
        c.m = 2;
        for (int v = 0; v < sub.vertex_count(); ++v) c.color.push_back(1 + v % 2);
        return std::make_pair(c, Bound(0));
    };
    auto res2 = color_with_apices(p4, {}, 1, 2, base2);
    CHECK(res2.coloring.color == std::vector<int>{1, 2, 1, 2});
}
