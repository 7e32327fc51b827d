#include "reconf/density.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "reconf/maxflow.hpp"

namespace reconf {

namespace {

// Feasibility probe for a density guess g = p/D, after Goldberg's
// construction with every capacity scaled by D so the network stays
// integral:
//
//   source -> v        capacity m*D
//   v -> sink          capacity (m - deg v)*D + 2p
//   u <-> v per edge   capacity D each way
//
// A cut keeping S on the source side costs m*n*D + 2(p|S| - D*e(S)), so the
// min cut drops below m*n*D exactly when some subset has density > p/D, and
// the source side of such a cut is a witness.
struct CutProbe {
    bool feasible = false;
    std::vector<int> subset;
};

CutProbe probe(const Graph& g, long long p, long long D, bool want_subset) {
    const int n = g.num_vertices();
    const long long m = g.num_edges();
    const int source = n, sink = n + 1;
    MaxFlow net(n + 2);
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, m * D);
        net.add_edge(v, sink, (m - g.degree(v)) * D + 2 * p);
    }
    for (auto [u, v] : g.edges()) {
        net.add_edge(u, v, D);
        net.add_edge(v, u, D);
    }
    const long long cut = net.run(source, sink);
    CutProbe result;
    result.feasible = cut < m * static_cast<long long>(n) * D;
    if (result.feasible && want_subset) {
        const std::vector<char> side = net.source_side(source);
        for (int v = 0; v < n; ++v)
            if (side[v])
                result.subset.push_back(v);
    }
    return result;
}

} // namespace

DensestResult densest_subgraph(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0)
        throw ArgumentError("empty graph");
    const long long m = g.num_edges();
    if (m == 0)
        return {VertexSubset({0}), Rational(0), Rational(0)};

    // Distinct subgraph densities are fractions e/v with v <= n, so any two
    // differ by at least 1/(n(n-1)). Searching the integer grid p/D with
    // D = n(n-1) pins the maximum into a half-open interval (lo/D, (lo+1)/D]
    // containing exactly one achievable value; the final cut at lo/D then
    // exposes a maximising subset.
    const long long D = static_cast<long long>(n) * (n - 1);
    if (static_cast<unsigned __int128>(m) * n * D > (static_cast<unsigned __int128>(1) << 62))
        throw ArgumentError("graph too large for exact density search");
    long long lo = 0;                               // density > lo/D is achievable (m >= 1)
    long long hi = static_cast<long long>(n) * D / 2 + 1; // > (n-1)/2 >= any density
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (probe(g, mid, D, false).feasible)
            lo = mid;
        else
            hi = mid;
    }
    CutProbe last = probe(g, lo, D, true);
    if (!last.feasible || last.subset.empty())
        throw InvariantError("density search lost its witness cut");

    long long inner = 0;
    std::vector<char> in_subset(static_cast<std::size_t>(n), 0);
    for (int v : last.subset)
        in_subset[v] = 1;
    for (auto [u, v] : g.edges())
        if (in_subset[u] && in_subset[v])
            ++inner;
    const Rational density(inner, static_cast<long long>(last.subset.size()));
    return {VertexSubset(std::move(last.subset)), density, Rational(2) * density};
}

Rational mad(const Graph& g) {
    return densest_subgraph(g).mad;
}

Rational mad_bruteforce(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0)
        throw ArgumentError("empty graph");
    if (n > 20)
        throw SizeGuardError("mad_bruteforce limited to n <= 20");
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            mask[v] |= std::uint32_t{1} << w;
    Rational best(0);
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        long long twice_edges = 0;
        for (std::uint32_t rest = s; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            twice_edges += std::popcount(mask[v] & s);
        }
        const Rational cand(twice_edges, std::popcount(s));
        if (cand > best)
            best = cand;
    }
    return best;
}

std::optional<Params> derive_params(const Rational& mad_value, int k) {
    if (k < 2)
        throw ArgumentError("k must be >= 2");
    if (mad_value.is_negative())
        throw ArgumentError("mad must be >= 0");
    const long long d = mad_value.floor() + 1; // smallest integer > mad
    if (d > k - 1)
        return std::nullopt;
    Params p;
    p.d = static_cast<int>(d);
    p.epsilon = Rational(d) - mad_value;
    p.k = k;
    p.c = d >= 3 ? diameter_exponent(p.d, p.epsilon) : 0.0;
    return p;
}

double diameter_exponent(int d, const Rational& epsilon) {
    if (epsilon.num() <= 0)
        throw ArgumentError("epsilon must be positive");
    if (d < 2 || Rational(d) < epsilon)
        throw ArgumentError("need 0 < epsilon <= d and d >= 2");
    if (d == 2)
        return 0.0;
    const double dd = static_cast<double>(d) * d;
    const double shrink_log =
        std::log(dd * static_cast<double>(epsilon.den())) -
        std::log(dd * static_cast<double>(epsilon.den()) - static_cast<double>(epsilon.num()));
    return std::log(static_cast<double>(d - 1)) / shrink_log;
}

} // namespace reconf
