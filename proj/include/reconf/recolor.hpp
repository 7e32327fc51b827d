#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "reconf/bigcount.hpp"
#include "reconf/decompose.hpp"
#include "reconf/density.hpp"
#include "reconf/graph.hpp"

namespace reconf {

struct RecolorStep {
    int vertex = 0;
    int color = 0;
    bool operator==(const RecolorStep&) const = default;
};

// A path in the reconfiguration graph: replaying steps from start yields
// end, every intermediate colouring is proper, and no step is a no-op.
struct RecolorSequence {
    std::vector<RecolorStep> steps;
    Coloring start;
    Coloring end;

    std::size_t length() const { return steps.size(); }
};

/// Smallest colour in 1..k not on any neighbour of u and different from
/// extra_forbidden (0 = none). At most deg(u)+1 colours are excluded, so a
/// free colour exists whenever deg(u) <= d-1 and k >= d+1; throws
/// InvariantError otherwise.
int free_color(const Graph& g, const Coloring& current, int u, int extra_forbidden);

struct LengthBudget {
    int levels = 0;          // L
    u128 per_vertex_max = 0; // T, saturating
    u128 total_bound = 0;    // n * T, saturating
};

/// Exact unrolled recurrence: L counts iterations of h <- h - ceil(eps*h/d^2)
/// from h = n down to 0, then T iterates T <- (d-1)*T + 1 exactly L times.
LengthBudget length_bound(long long n, int d, const Rational& epsilon);

/// Explicit recolouring sequence from alpha to beta, built over the peeling
/// decomposition layer by layer from the innermost level outwards. Valid for
/// any (d-1)-degenerate graph with k >= d+1; the length stays within
/// length_bound whenever every peeling certificate met its size bound.
RecolorSequence recolor(const Graph& g, const Coloring& alpha, const Coloring& beta,
                        const Params& params);

/// Same construction over a precomputed peeling.
RecolorSequence recolor(const Graph& g, const Coloring& alpha, const Coloring& beta, int k,
                        const Peeling& peeling);

enum class VerifyFault {
    none,
    vertex_out_of_range,
    color_out_of_range,
    no_op_step,
    monochromatic_edge,
    end_mismatch,
};

struct VerifyResult {
    bool ok = false;
    VerifyFault fault = VerifyFault::none;
    std::size_t step_index = 0; // equals steps.size() for end_mismatch
    std::string message;

    static VerifyResult pass() { return {true, VerifyFault::none, 0, ""}; }
};

/// Independent checker: replays steps from alpha and reports the first
/// violation (no-op step, monochromatic edge, colour/vertex out of range,
/// final colouring != beta).
VerifyResult verify_sequence(const Graph& g, const Coloring& alpha, const Coloring& beta,
                             const std::vector<RecolorStep>& steps);

/// How many times each vertex is recoloured by `steps`.
std::vector<long long> recolor_counts(int n, const std::vector<RecolorStep>& steps);

// Sequence file format: header "s <count>", then one "<vertex> <colour>"
// line per step with 1-based vertices.
void write_sequence(const std::vector<RecolorStep>& steps, std::ostream& out);
std::vector<RecolorStep> parse_sequence(std::istream& in);

} // namespace reconf
