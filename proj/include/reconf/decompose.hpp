#pragma once

#include <vector>

#include "reconf/density.hpp"
#include "reconf/graph.hpp"
#include "reconf/rational.hpp"

namespace reconf {

/// Exactly the vertices of degree <= d-1 in g.
VertexSubset low_degree_set(const Graph& g, int d);

// An independent set I drawn from the low-degree set S of a host graph on
// h vertices. When mad(host) <= d - epsilon the counting argument forces
// |S| >= eps*h/d and |I| >= eps*h/d^2; both are checked exactly and the
// outcome recorded in the flags, never assumed.
struct SpecialSetCertificate {
    VertexSubset ind_set;    // I: independent, every member has host degree <= d-1
    VertexSubset low_degree; // S: all vertices of host degree <= d-1
    int host_size = 0;       // h
    int d = 0;
    Rational epsilon;
    bool mad_hypothesis_violated = false; // |S| < eps*h/d, so mad(host) > d - eps
    bool size_bound_met = false;          // |I| >= eps*h/d^2
};

/// Greedy maximal independent subset of the low-degree set, scanning in
/// ascending (degree, vertex) order. Throws DegeneracyError when S is empty
/// (no vertex of degree < d); succeeds otherwise, flagging certificates
/// whose size guarantees fail.
SpecialSetCertificate special_independent_set(const Graph& g, int d, const Rational& epsilon);

// One peeling round; vertex labels refer to the original graph, host_size to
// the intermediate host the layer was extracted from.
struct PeelLayer {
    VertexSubset ind_set;
    VertexSubset low_degree;
    int host_size = 0;
    bool mad_hypothesis_violated = false;
    bool size_bound_met = false;
};

// Layers are pairwise disjoint, union to all vertices, and layer j is a
// special independent set of the subgraph induced on layers j..L-1.
struct Peeling {
    std::vector<PeelLayer> layers;
    int d = 0;
    Rational epsilon;

    bool all_size_bounds_met() const;
};

/// Repeatedly extracts a special independent set and removes it until the
/// graph is empty. Propagates DegeneracyError when some intermediate graph
/// has minimum degree >= d (g is not (d-1)-degenerate).
Peeling peel(const Graph& g, int d, const Rational& epsilon);

} // namespace reconf
