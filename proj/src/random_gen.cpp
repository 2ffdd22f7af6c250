#include "pathhom/random_gen.hpp"

#include <string>

namespace pathhom {

bool chance(std::mt19937_64& rng, double probability) {
    if (probability <= 0.0) {
        rng();  // keep the stream position independent of the probability
        return false;
    }
    if (probability >= 1.0) {
        rng();
        return true;
    }
    // 2^64 * probability, rounded down; the draw is uniform on [0, 2^64).
    auto threshold = static_cast<std::uint64_t>(probability * 18446744073709551616.0);
    return rng() < threshold;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw InvalidInput("draw_below: empty range");
    return rng() % n;
}

Digraph random_digraph(std::uint64_t seed, long vertices, double density,
                       const std::string& prefix) {
    if (vertices < 1) throw InvalidInput("random_digraph: need at least one vertex");
    std::mt19937_64 rng(seed);
    Digraph g;
    for (long i = 0; i < vertices; ++i) g.vertices.intern(prefix + std::to_string(i));
    for (long i = 0; i < vertices; ++i)
        for (long j = 0; j < vertices; ++j) {
            if (i == j) continue;
            if (chance(rng, density)) g.add_edge(i, j);
        }
    g.normalize();
    return g;
}

Digraph random_digraph_sized(std::uint64_t seed, long max_vertices, double density,
                             const std::string& prefix) {
    if (max_vertices < 2) throw InvalidInput("random_digraph_sized: max_vertices must be >= 2");
    long n = 2 + static_cast<long>(seed % static_cast<std::uint64_t>(max_vertices - 1));
    return random_digraph(seed, n, density, prefix);
}

std::pair<PathComplex, PathComplex> random_disjoint_pair(std::uint64_t seed, long max_vertices,
                                                         double density, long top_dim,
                                                         long budget_paths) {
    Digraph ga = random_digraph_sized(seed * 2 + 1, max_vertices, density, "a");
    Digraph gb = random_digraph_sized(seed * 2 + 2, max_vertices, density, "b");
    return {path_complex_of_digraph(ga, top_dim, budget_paths),
            path_complex_of_digraph(gb, top_dim, budget_paths)};
}

}  // namespace pathhom
