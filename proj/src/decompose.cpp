#include "reconf/decompose.hpp"

#include <algorithm>
#include <string>

namespace reconf {

namespace {

void validate(int n, int d, const Rational& epsilon) {
    if (n < 1)
        throw ArgumentError("empty graph");
    if (d < 1)
        throw ArgumentError("d must be >= 1");
    if (epsilon.num() <= 0 || epsilon > Rational(d))
        throw ArgumentError("need 0 < epsilon <= d");
}

// |S| >= eps*h/d, exactly.
bool low_degree_bound_holds(long long s, long long h, int d, const Rational& eps) {
    return static_cast<__int128>(s) * d * eps.den() >= static_cast<__int128>(eps.num()) * h;
}

// |I| >= eps*h/d^2, exactly.
bool size_bound_holds(long long i, long long h, int d, const Rational& eps) {
    return static_cast<__int128>(i) * d * d * eps.den() >= static_cast<__int128>(eps.num()) * h;
}

// One round over the vertices still alive. deg[] holds degrees within the
// alive subgraph. Output subsets carry original labels.
struct Round {
    std::vector<int> ind_set;
    std::vector<int> low_degree;
};

Round extract_round(const Graph& g, const std::vector<char>& alive, const std::vector<int>& deg,
                    int d) {
    Round r;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (alive[v] && deg[v] <= d - 1)
            r.low_degree.push_back(v);
    if (r.low_degree.empty())
        throw DegeneracyError("no vertex of degree < " + std::to_string(d));

    // Greedy maximal independent subset, ascending (degree, vertex) order.
    std::vector<int> order = r.low_degree;
    std::sort(order.begin(), order.end(),
              [&deg](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int v : order) {
        if (blocked[v])
            continue;
        r.ind_set.push_back(v);
        for (int w : g.neighbors(v))
            if (alive[w])
                blocked[w] = 1;
    }
    std::sort(r.ind_set.begin(), r.ind_set.end());
    return r;
}

} // namespace

VertexSubset low_degree_set(const Graph& g, int d) {
    if (d < 1)
        throw ArgumentError("d must be >= 1");
    std::vector<int> vs;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) <= d - 1)
            vs.push_back(v);
    return VertexSubset(std::move(vs));
}

SpecialSetCertificate special_independent_set(const Graph& g, int d, const Rational& epsilon) {
    validate(g.num_vertices(), d, epsilon);
    std::vector<char> alive(static_cast<std::size_t>(g.num_vertices()), 1);
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
        deg[v] = g.degree(v);
    Round r = extract_round(g, alive, deg, d);

    SpecialSetCertificate cert;
    cert.host_size = g.num_vertices();
    cert.d = d;
    cert.epsilon = epsilon;
    cert.mad_hypothesis_violated =
        !low_degree_bound_holds(static_cast<long long>(r.low_degree.size()), cert.host_size, d,
                                epsilon);
    cert.size_bound_met =
        size_bound_holds(static_cast<long long>(r.ind_set.size()), cert.host_size, d, epsilon);
    cert.ind_set = VertexSubset(std::move(r.ind_set));
    cert.low_degree = VertexSubset(std::move(r.low_degree));
    return cert;
}

bool Peeling::all_size_bounds_met() const {
    return std::all_of(layers.begin(), layers.end(),
                       [](const PeelLayer& l) { return l.size_bound_met; });
}

Peeling peel(const Graph& g, int d, const Rational& epsilon) {
    Peeling result;
    result.d = d;
    result.epsilon = epsilon;
    if (g.num_vertices() == 0)
        return result;
    validate(g.num_vertices(), d, epsilon);

    std::vector<char> alive(static_cast<std::size_t>(g.num_vertices()), 1);
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
        deg[v] = g.degree(v);
    int remaining = g.num_vertices();

    while (remaining > 0) {
        Round r = extract_round(g, alive, deg, d);
        PeelLayer layer;
        layer.host_size = remaining;
        layer.mad_hypothesis_violated = !low_degree_bound_holds(
            static_cast<long long>(r.low_degree.size()), remaining, d, epsilon);
        layer.size_bound_met =
            size_bound_holds(static_cast<long long>(r.ind_set.size()), remaining, d, epsilon);
        for (int v : r.ind_set) {
            alive[v] = 0;
            --remaining;
            for (int w : g.neighbors(v))
                if (alive[w])
                    --deg[w];
        }
        layer.ind_set = VertexSubset(std::move(r.ind_set));
        layer.low_degree = VertexSubset(std::move(r.low_degree));
        result.layers.push_back(std::move(layer));
    }
    return result;
}

} // namespace reconf
