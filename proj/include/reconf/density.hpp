#pragma once

#include <optional>

#include "reconf/graph.hpp"
#include "reconf/rational.hpp"

namespace reconf {

struct DensestResult {
    VertexSubset subset; // nonempty maximiser of |E(S)|/|S|
    Rational density;
    Rational mad; // 2 * density
};

/// Exact densest subgraph via binary search over candidate densities with a
/// min-cut feasibility probe. Ties between equally dense subsets resolve to
/// whichever the final min cut produces. Edgeless graphs yield {0} with
/// density 0.
DensestResult densest_subgraph(const Graph& g);

/// Maximum average degree, max over subgraphs H of 2|E(H)|/|V(H)|, exact.
Rational mad(const Graph& g);

/// Independent oracle: maximum of 2*e(S)/|S| over all nonempty subsets,
/// by exhaustive enumeration. Guarded to n <= 20.
Rational mad_bruteforce(const Graph& g);

struct Params {
    int d = 0;
    Rational epsilon; // 0 < epsilon <= d, with mad <= d - epsilon
    int k = 0;        // palette size, k >= d + 1
    double c = 0.0;   // diameter exponent, see diameter_exponent
};

/// Smallest integer d with mad < d and d <= k-1, epsilon = d - mad.
/// Returns nullopt when mad >= k-1 (no valid d exists).
std::optional<Params> derive_params(const Rational& mad_value, int k);

/// c = ln(d-1) / ln(d^2 / (d^2 - epsilon)) for d >= 3; 0 for d = 2, where
/// the recoloured-count recurrence has branching factor 1 and the growth is
/// logarithmic.
double diameter_exponent(int d, const Rational& epsilon);

} // namespace reconf
