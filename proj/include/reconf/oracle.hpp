#pragma once

#include <optional>
#include <vector>

#include "reconf/bigcount.hpp"
#include "reconf/density.hpp"
#include "reconf/graph.hpp"

namespace reconf {

// Brute-force ground truth over the reconfiguration graph R_k(G): nodes are
// the proper k-colourings, edges join colourings differing on one vertex.
// All operations are guarded to k^n <= 10^7.

/// Shortest-path length between two proper colourings in R_k(G), or nullopt
/// when beta is unreachable from alpha.
std::optional<long long> bfs_distance(const Graph& g, int k, const Coloring& alpha,
                                      const Coloring& beta);

struct ReconfSummary {
    long long coloring_count = 0;
    int component_count = 0;
    std::vector<long long> component_diameters; // ordered by smallest member
    long long frozen_count = 0;                 // isolated nodes of R_k(G)
};

/// Exhaustive census of R_k(G): proper-colouring count, components, exact
/// per-component diameters (BFS from every node), frozen colourings.
ReconfSummary summarize(const Graph& g, int k);

struct DiameterReport {
    bool connected = false;
    long long diameter = 0; // max over components
    u128 bound = 0;         // length_bound(n, d, eps).total_bound
    bool within_bound = false;
    long long coloring_count = 0;
    int component_count = 0;

    bool ok() const { return connected && within_bound; }
};

/// Checks R_k(G) is connected with diameter <= length_bound(n, d, eps).
/// Failures are reported in the result, not thrown: they would falsify
/// either the diameter guarantee or this implementation.
DiameterReport diameter_check(const Graph& g, int k, const Params& params);

} // namespace reconf
