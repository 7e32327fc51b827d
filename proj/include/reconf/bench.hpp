#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reconf/bigcount.hpp"
#include "reconf/rational.hpp"

namespace reconf {

enum class BenchFamily { forest_union, cycle, grid };

struct BenchConfig {
    BenchFamily family = BenchFamily::forest_union;
    int t = 1; // forest count for forest_union
    std::vector<int> sizes;
    int k = 3;
    std::uint64_t seed = 0;
    int seeds_per_n = 1;
    bool with_oracle = false;
    std::optional<int> d_override;
};

struct RunRecord {
    std::string instance;
    int n = 0;
    long long m = 0;
    Rational mad_value;
    int d = 0;
    Rational epsilon;
    int k = 0;
    long long length = 0;
    u128 bound = 0;
    std::optional<long long> oracle_distance;
    double wall_ms = 0.0;
};

struct BenchResult {
    std::vector<RunRecord> rows;
    // Least-squares slope of log(length) vs log(n); absent with fewer than
    // two distinct sizes.
    std::optional<double> slope;
};

/// Runs one recolouring per (size, repetition): generates the instance,
/// derives parameters from its exact mad, draws random proper endpoint
/// colourings, builds and verifies the sequence. All randomness flows from
/// config.seed.
BenchResult run_bench(const BenchConfig& config);

/// Fixed-schema CSV: header, one row per record (rationals as "p/q"), and a
/// final "slope,<value>" footer when a slope was fitted.
void write_csv(const BenchResult& result, std::ostream& out);

} // namespace reconf
