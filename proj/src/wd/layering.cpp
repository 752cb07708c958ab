#include "wd/layering.hpp"

#include <algorithm>
#include <stdexcept>

namespace wd {

int Layering::layer_count() const {
    int mx = -1;
    for (int l : layer) mx = std::max(mx, l);
    return mx + 1;
}

LayeringValidation validate_layering(const Graph& g, const Layering& ly) {
    LayeringValidation out;
    if (static_cast<int>(ly.layer.size()) != g.vertex_count())
        throw std::invalid_argument("layering size != vertex count");
    for (int l : ly.layer)
        if (l < 0) throw std::invalid_argument("negative layer index");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (std::abs(ly.layer[u] - ly.layer[v]) > 1) {
                out.ok = false;
                out.violating_edge = {u, v};
                return out;
            }
        }
    out.ok = true;
    return out;
}

int layered_width(const Graph& g, const RootedTreeDecomposition& rtd,
                  const Layering& ly) {
    if (static_cast<int>(ly.layer.size()) != g.vertex_count())
        throw std::invalid_argument("layering size != vertex count");
    int best = 0;
    std::vector<int> count;  // per layer, reset per bag via touched list
    count.assign(ly.layer_count(), 0);
    std::vector<int> touched;
    for (const auto& bag : rtd.bags) {
        touched.clear();
        for (int v : bag) {
            int l = ly.layer[v];
            if (count[l]++ == 0) touched.push_back(l);
            best = std::max(best, count[l]);
        }
        for (int l : touched) count[l] = 0;
    }
    return best;
}

}  // namespace wd
