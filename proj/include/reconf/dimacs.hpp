#pragma once

#include <iosfwd>

#include "reconf/graph.hpp"

namespace reconf {

// DIMACS edge format: optional "c ..." comments, one "p edge <n> <m>" header,
// then "e <u> <v>" lines with 1-based endpoints. Duplicate edge lines are
// dropped with a warning on `diagnostics` (when non-null); self-loops and
// malformed lines raise ParseError with the offending line number.
Graph parse_dimacs(std::istream& in, std::ostream* diagnostics = nullptr);

void write_dimacs(const Graph& g, std::ostream& out);

// Colouring file: n whitespace-separated integers in 1..k, entry i being the
// colour of vertex i (1-based order).
Coloring parse_coloring(std::istream& in, int n, int k);

void write_coloring(const Coloring& c, std::ostream& out);

} // namespace reconf
