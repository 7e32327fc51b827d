#include "reconf/recolor.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace reconf {

namespace {

// Smallest colour in 1..k avoiding extra_forbidden and every live neighbour
// of u. live == nullptr means all vertices are live.
int free_color_impl(const Graph& g, const std::vector<int>& colors, int k, int u,
                    int extra_forbidden, const std::vector<char>* live) {
    for (int c = 1; c <= k; ++c) {
        if (c == extra_forbidden)
            continue;
        bool used = false;
        for (int w : g.neighbors(u)) {
            if (live && !(*live)[w])
                continue;
            if (colors[w] == c) {
                used = true;
                break;
            }
        }
        if (!used)
            return c;
    }
    throw InvariantError("no free colour for vertex " + std::to_string(u + 1) +
                         "; a peeling certificate must be broken");
}

} // namespace

int free_color(const Graph& g, const Coloring& current, int u, int extra_forbidden) {
    if (current.size() != g.num_vertices())
        throw ArgumentError("colouring length does not match vertex count");
    if (u < 0 || u >= g.num_vertices())
        throw ArgumentError("vertex out of range");
    return free_color_impl(g, current.colors, current.k, u, extra_forbidden, nullptr);
}

LengthBudget length_bound(long long n, int d, const Rational& epsilon) {
    if (n < 0)
        throw ArgumentError("n must be >= 0");
    if (d < 1)
        throw ArgumentError("d must be >= 1");
    if (epsilon.num() <= 0 || epsilon > Rational(d))
        throw ArgumentError("need 0 < epsilon <= d");

    LengthBudget budget;
    const long long dd = static_cast<long long>(d) * d;
    long long h = n;
    while (h > 0) {
        // ceil(eps * h / d^2); >= 1 because eps > 0, so this terminates.
        const __int128 num = static_cast<__int128>(epsilon.num()) * h;
        const __int128 den = static_cast<__int128>(epsilon.den()) * dd;
        h -= static_cast<long long>((num + den - 1) / den);
        ++budget.levels;
    }
    for (int i = 0; i < budget.levels && budget.per_vertex_max != kU128Max; ++i)
        budget.per_vertex_max =
            sat_add(sat_mul(budget.per_vertex_max, static_cast<u128>(d - 1)), 1);
    budget.total_bound = sat_mul(static_cast<u128>(n), budget.per_vertex_max);
    return budget;
}

RecolorSequence recolor(const Graph& g, const Coloring& alpha, const Coloring& beta,
                        const Params& params) {
    if (params.k < params.d + 1)
        throw ArgumentError("k must be at least d + 1");
    const Peeling peeling = g.num_vertices() > 0 ? peel(g, params.d, params.epsilon) : Peeling{};
    return recolor(g, alpha, beta, params.k, peeling);
}

RecolorSequence recolor(const Graph& g, const Coloring& alpha, const Coloring& beta, int k,
                        const Peeling& peeling) {
    const int n = g.num_vertices();
    if (!peeling.layers.empty() && k < peeling.d + 1)
        throw ArgumentError("k must be at least d + 1");
    if (alpha.k != k || beta.k != k)
        throw ArgumentError("palette size mismatch between colourings and parameters");
    if (alpha.size() != n || beta.size() != n)
        throw ArgumentError("colouring length does not match vertex count");
    if (!is_proper(g, alpha))
        throw ArgumentError("alpha is not a proper colouring");
    if (!is_proper(g, beta))
        throw ArgumentError("beta is not a proper colouring");

    // Replay the recursion iteratively, innermost layer outwards. At level j
    // the live scope is layers j..L-1; the inner sequence transforms the
    // scope of level j+1 from alpha to beta, and gets extended by fixing up
    // each layer-j vertex about to collide with an inner step, then setting
    // beta on the layer.
    std::vector<char> live(static_cast<std::size_t>(n), 0);
    std::vector<char> in_layer(static_cast<std::size_t>(n), 0);
    std::vector<RecolorStep> inner;
    for (std::size_t jj = peeling.layers.size(); jj-- > 0;) {
        const PeelLayer& layer = peeling.layers[jj];
        for (int v : layer.ind_set) {
            live[v] = 1;
            in_layer[v] = 1;
        }
        std::vector<int> work = alpha.colors;
        std::vector<RecolorStep> out;
        out.reserve(inner.size());
        for (const RecolorStep& st : inner) {
            for (int u : g.neighbors(st.vertex)) {
                if (in_layer[u] && work[u] == st.color) {
                    const int c = free_color_impl(g, work, k, u, st.color, &live);
                    out.push_back({u, c});
                    work[u] = c;
                }
            }
            out.push_back(st);
            work[st.vertex] = st.color;
        }
        for (int u : layer.ind_set)
            if (work[u] != beta.colors[u]) {
                out.push_back({u, beta.colors[u]});
                work[u] = beta.colors[u];
            }
        inner = std::move(out);
        for (int v : layer.ind_set)
            in_layer[v] = 0;
    }
    return {std::move(inner), alpha, beta};
}

VerifyResult verify_sequence(const Graph& g, const Coloring& alpha, const Coloring& beta,
                             const std::vector<RecolorStep>& steps) {
    const int n = g.num_vertices();
    if (alpha.size() != n || beta.size() != n)
        throw ArgumentError("colouring length does not match vertex count");
    const int k = alpha.k;

    std::vector<int> work = alpha.colors;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto [v, c] = steps[i];
        if (v < 0 || v >= n)
            return {false, VerifyFault::vertex_out_of_range, i,
                    "step " + std::to_string(i) + " names vertex " + std::to_string(v + 1) +
                        ", graph has " + std::to_string(n) + " vertices"};
        if (c < 1 || c > k)
            return {false, VerifyFault::color_out_of_range, i,
                    "step " + std::to_string(i) + " uses colour " + std::to_string(c) +
                        " outside 1.." + std::to_string(k)};
        if (work[v] == c)
            return {false, VerifyFault::no_op_step, i,
                    "step " + std::to_string(i) + " recolours vertex " + std::to_string(v + 1) +
                        " to its current colour " + std::to_string(c)};
        for (int w : g.neighbors(v))
            if (work[w] == c)
                return {false, VerifyFault::monochromatic_edge, i,
                        "step " + std::to_string(i) + " makes edge (" + std::to_string(v + 1) +
                            ", " + std::to_string(w + 1) + ") monochromatic in colour " +
                            std::to_string(c)};
        work[v] = c;
    }
    for (int v = 0; v < n; ++v)
        if (work[v] != beta.colors[v])
            return {false, VerifyFault::end_mismatch, steps.size(),
                    "final colouring differs from beta at vertex " + std::to_string(v + 1)};
    return VerifyResult::pass();
}

std::vector<long long> recolor_counts(int n, const std::vector<RecolorStep>& steps) {
    std::vector<long long> counts(static_cast<std::size_t>(n), 0);
    for (const RecolorStep& st : steps)
        ++counts[st.vertex];
    return counts;
}

void write_sequence(const std::vector<RecolorStep>& steps, std::ostream& out) {
    out << "s " << steps.size() << "\n";
    for (const RecolorStep& st : steps)
        out << st.vertex + 1 << " " << st.color << "\n";
}

std::vector<RecolorStep> parse_sequence(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long declared = -1;
    std::vector<RecolorStep> steps;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream iss(line);
        if (declared < 0) {
            std::string tag, extra;
            if (!(iss >> tag >> declared) || tag != "s" || declared < 0 || (iss >> extra))
                throw ParseError(lineno, "malformed sequence header (expected 's <count>')");
            continue;
        }
        long long v = 0, c = 0;
        std::string extra;
        if (!(iss >> v >> c) || (iss >> extra))
            throw ParseError(lineno, "malformed step (expected '<vertex> <colour>')");
        if (v < 1)
            throw ParseError(lineno, "vertices are 1-based");
        steps.push_back({static_cast<int>(v - 1), static_cast<int>(c)});
    }
    if (declared < 0)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing sequence header");
    if (static_cast<long long>(steps.size()) != declared)
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " steps, file has " +
                                     std::to_string(steps.size()));
    return steps;
}

} // namespace reconf
