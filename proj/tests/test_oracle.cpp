#include <doctest.h>

#include "test_util.hpp"
#include "wd/generators.hpp"
#include "wd/heuristic_td.hpp"
#include "wd/oracle.hpp"
#include "wd/tree_color.hpp"

using namespace wd;

namespace {
Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}
}  // namespace

TEST_CASE("brute force worked examples") {
    Graph p4 = path(4);
    auto res = brute_min_weak_diameter(p4, 1, 2);
    CHECK(res.d_min == 0);  // proper 2-coloring 1,2,1,2
    res = brute_min_weak_diameter(p4, 1, 1);
    CHECK(res.d_min == 3);  // the single coloring has one component

    GenSpec c5spec;
    c5spec.family = GenSpec::kCycle;
    c5spec.n = 5;
    auto c5 = generate(c5spec).graph;
    CHECK(brute_min_weak_diameter(c5, 1, 2).d_min == 1);

    CHECK_THROWS_AS(brute_min_weak_diameter(path(20), 1, 2), OracleError);
}

TEST_CASE("witness coloring achieves the reported optimum") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 8);
        Graph g = wdtest::random_graph(n, 0.3, seed * 11);
        for (int ell : {1, 2}) {
            auto res = brute_min_weak_diameter(g, ell, 2);
            CHECK(wdtest::naive_worst_weak_diameter(g, res.witness) == res.d_min);
        }
    }
}

TEST_CASE("d_min is zero iff the power is properly colorable") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        Graph g = wdtest::random_graph(n, 0.25, seed * 3 + 1);
        for (int ell : {1, 2})
            for (int m : {1, 2, 3}) {
                bool proper = power_properly_colorable(g, ell, m);
                int dmin = brute_min_weak_diameter(g, ell, m).d_min;
                CHECK((dmin == 0) == proper);
            }
    }
}

TEST_CASE("parallel oracle matches sequential") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = wdtest::random_graph(9, 0.3, seed * 7);
        for (int m : {2, 3}) {
            auto seq = brute_min_weak_diameter(g, 1, m, 16, 1);
            auto par = brute_min_weak_diameter(g, 1, m, 16, 4);
            CHECK(seq.d_min == par.d_min);
        }
    }
}

TEST_CASE("the pipeline can never beat the oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 3 + static_cast<int>(seed % 6);
        Graph g = wdtest::random_connected_graph(n, 2, seed);
        auto rtd = heuristic_td(g);
        int width = std::max(td_metrics(rtd).width, 1);
        for (int ell : {1, 2}) {
            auto res = color_bounded_treewidth(g, ell, width, rtd);
            auto rep = certify(g, res.coloring, res.bound);
            REQUIRE(rep.pass);
            int achieved = rep.worst_wd();
            CHECK(brute_min_weak_diameter(g, ell, 2).d_min <= achieved);
        }
    }
}
