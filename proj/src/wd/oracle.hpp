#ifndef WD_ORACLE_HPP
#define WD_ORACLE_HPP

#include "wd/coloring.hpp"
#include "wd/graph.hpp"

namespace wd {

struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
    int d_min = 0;       // minimum achievable max component weak diameter in G^ell
    Coloring witness;    // a coloring achieving it
};

// Exact minimum over all m-colorings of the maximum component weak diameter
// in G^ell. Enumeration is canonical (first occurrences of colors appear in
// ascending order) with early cutoff against the best value found so far.
// threads > 1 splits the search over the top branching level; branches do not
// share cutoffs, so the result is identical either way.
OracleResult brute_min_weak_diameter(const Graph& g, int ell, int m,
                                     int max_vertices = 16, int threads = 1);

// Independent check: is G^ell properly m-colorable? (Backtracking on the
// materialized power graph.)
bool power_properly_colorable(const Graph& g, int ell, int m);

}  // namespace wd

#endif
