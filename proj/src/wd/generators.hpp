#ifndef WD_GENERATORS_HPP
#define WD_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wd/graph.hpp"
#include "wd/layering.hpp"
#include "wd/tree_decomposition.hpp"

namespace wd {

// Fixed, platform-independent PRNG (splitmix64) so every generated corpus is
// reproducible from its seed alone.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct GenSpec {
    enum Family {
        kPath,
        kCycle,
        kGrid,
        kTree,
        kPartialKtree,
        kLayeredRandom,
        kApexed,
    };
    Family family = kPath;
    int n = 0;               // path / cycle / tree / partial_ktree
    int rows = 0, cols = 0;  // grid / layered_random / apexed
    int k = 2;               // k-tree width; apex count for apexed
    double keep = 0.5;       // edge keep probability (partial_ktree, layered_random)
    std::uint64_t seed = 1;
};

struct Generated {
    Graph graph;
    std::optional<RootedTreeDecomposition> rtd;
    std::optional<Layering> layering;
    VertexSet apices;  // nonempty only for apexed; witnesses describe graph - apices
};

struct GenError : std::runtime_error {
    explicit GenError(const std::string& what) : std::runtime_error(what) {}
};

Generated generate(const GenSpec& spec);

GenSpec::Family family_from_name(const std::string& name);

}  // namespace wd

#endif
