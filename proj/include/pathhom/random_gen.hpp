#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "pathhom/model.hpp"

namespace pathhom {

// Deterministic Bernoulli draw from a mt19937_64 stream. Uses an integer
// threshold so results do not depend on the platform's distribution code.
bool chance(std::mt19937_64& rng, double probability);

// Uniform integer in [0, n) via rejection-free modulo on the full 64-bit draw
// (bias is negligible for the tiny n used here and, more importantly, the
// result is identical on every platform).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n);

// Random digraph on `vertices` vertices labeled `prefix`0.., each ordered
// pair (i, j), i != j, kept with probability `density`. Fully determined by
// the seed.
Digraph random_digraph(std::uint64_t seed, long vertices, double density,
                       const std::string& prefix = "v");

// Shape used by the randomized verification suites: the seed also chooses the
// vertex count, 2 + (seed mod (max_vertices - 1)), so a seed range sweeps
// sizes 2..max_vertices.
Digraph random_digraph_sized(std::uint64_t seed, long max_vertices, double density,
                             const std::string& prefix = "v");

// Two digraph-derived path complexes on disjoint vertex sets ("a..", "b..").
std::pair<PathComplex, PathComplex> random_disjoint_pair(std::uint64_t seed, long max_vertices,
                                                         double density, long top_dim,
                                                         long budget_paths);

}  // namespace pathhom
