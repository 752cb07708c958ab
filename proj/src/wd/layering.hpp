#ifndef WD_LAYERING_HPP
#define WD_LAYERING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wd/graph.hpp"
#include "wd/tree_decomposition.hpp"

namespace wd {

// Ordered partition of V into layers; every edge spans at most one layer step.
struct Layering {
    std::vector<int> layer;  // per-vertex nonnegative layer index

    int layer_of(int v) const { return layer[v]; }
    int layer_count() const;
};

struct LayeringValidation {
    bool ok = false;
    std::optional<std::pair<int, int>> violating_edge;
};

LayeringValidation validate_layering(const Graph& g, const Layering& ly);

// max over (bag, layer) of the intersection size.
int layered_width(const Graph& g, const RootedTreeDecomposition& rtd,
                  const Layering& ly);

}  // namespace wd

#endif
