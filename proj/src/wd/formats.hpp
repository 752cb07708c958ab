#ifndef WD_FORMATS_HPP
#define WD_FORMATS_HPP

#include <iosfwd>
#include <string>

#include "wd/coloring.hpp"
#include "wd/graph.hpp"
#include "wd/layering.hpp"
#include "wd/tree_decomposition.hpp"

namespace wd {

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// PACE-style graph format: comment lines "c ...", one header "p tw <n> <m>",
// then m lines "u v" with 1-based vertex ids.
Graph parse_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);

// PACE-style decomposition format: "s td <bags> <maxbagsize> <n>",
// bag lines "b <id> v1 v2 ...", then tree edges between 1-based bag ids.
// An unrooted input is rooted at the node containing the smallest vertex id,
// ties broken by node id.
RootedTreeDecomposition parse_td(std::istream& in, int n_vertices);
void write_td(std::ostream& out, const RootedTreeDecomposition& rtd,
              int n_vertices);

// {"layers":[per-vertex layer index]}
Layering parse_layering_json(std::istream& in, int n_vertices);
void write_layering_json(std::ostream& out, const Layering& ly);

// {"ell":L,"m":M,"colors":[...]} with 0-indexed color values.
Coloring parse_coloring_json(std::istream& in, int n_vertices);
void write_coloring_json(std::ostream& out, const Coloring& c);

// Construction metadata sidecar: {"eta":..,"theta":..,"root":1-based node or
// 0 for the format default,"colorer_F":name,"colorer_Fprime":name}.
struct ConstructionMeta {
    int eta = 0;
    int theta = 0;
    int root = 0;  // 1-based; 0 keeps the .td rooting rule
    std::string colorer_f = "trivial_small";
    std::string colorer_fprime = "vertex_cover";
};

ConstructionMeta parse_construction_json(std::istream& in);
void write_construction_json(std::ostream& out, const ConstructionMeta& meta);

// Helpers used by the CLI.
Graph load_gr(const std::string& path);
RootedTreeDecomposition load_td(const std::string& path, int n_vertices);
Layering load_layering(const std::string& path, int n_vertices);
Coloring load_coloring(const std::string& path, int n_vertices);
void save_text(const std::string& path, const std::string& content);

}  // namespace wd

#endif
