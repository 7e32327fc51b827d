#pragma once

#include <cstdint>
#include <random>

#include "reconf/graph.hpp"

namespace reconf {

// Deterministic test-instance generators. Fixed arguments give bit-identical
// graphs across runs and platforms (mt19937_64 is fully specified).

Graph make_path(int n);
Graph make_cycle(int n); // n=1 gives K1, n=2 collapses to a single edge
Graph make_complete(int n);
Graph make_grid(int rows, int cols);
Graph make_star(int n); // vertex 0 is the centre, n-1 leaves

/// Edge-union of t random spanning forests of K_n, each grown by repeated
/// random edge insertion with cycle rejection via union-find. Arboricity is
/// at most t, hence mad < 2t.
Graph make_forest_union(int n, int t, std::uint64_t seed);

/// Uniform draw from [0, bound) by rejection; deterministic for a fixed
/// engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random proper k-colouring, built greedily along a reverse degeneracy
/// order with a uniform choice among the free colours at each vertex.
/// Requires k > degeneracy(g); throws ArgumentError otherwise.
Coloring random_proper_coloring(const Graph& g, int k, std::mt19937_64& rng);

} // namespace reconf
