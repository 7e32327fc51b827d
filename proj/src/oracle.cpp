#include "reconf/oracle.hpp"

#include <algorithm>
#include <queue>

#include "reconf/recolor.hpp"

namespace reconf {

namespace {

constexpr long long kStateGuard = 10'000'000;

// Powers of k per vertex, big-endian (vertex 0 owns the most significant
// digit), so backtracking enumeration yields ascending codes.
struct Encoding {
    int n;
    int k;
    std::vector<long long> pow;

    Encoding(int n_, int k_) : n(n_), k(k_), pow(static_cast<std::size_t>(n_)) {
        long long p = 1;
        for (int i = n - 1; i >= 0; --i) {
            pow[i] = p;
            if (i > 0)
                p *= k;
        }
    }

    long long encode(const std::vector<int>& colors) const {
        long long code = 0;
        for (int i = 0; i < n; ++i)
            code += static_cast<long long>(colors[i] - 1) * pow[i];
        return code;
    }

    std::vector<int> decode(long long code) const {
        std::vector<int> colors(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            colors[i] = static_cast<int>(code / pow[i]) + 1;
            code %= pow[i];
        }
        return colors;
    }
};

long long state_space_size(int n, int k) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > kStateGuard / k)
            throw SizeGuardError("state space k^n exceeds 10^7");
        total *= k;
    }
    return total;
}

void check_endpoint(const Graph& g, const Coloring& f, const char* name) {
    if (!is_proper(g, f))
        throw ArgumentError(std::string(name) + " is not a proper colouring");
}

// All proper colourings as ascending codes, by backtracking over vertices in
// index order (only edges to already-assigned vertices need checking).
std::vector<long long> enumerate_proper(const Graph& g, int k, const Encoding& enc) {
    const int n = g.num_vertices();
    std::vector<long long> codes;
    if (n == 0)
        return codes;
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    int v = 0;
    while (v >= 0) {
        if (v == n) {
            codes.push_back(enc.encode(colors));
            --v;
            continue;
        }
        bool advanced = false;
        for (int c = choice[v] + 1; c <= k; ++c) {
            bool clash = false;
            for (int w : g.neighbors(v)) {
                if (w >= v)
                    break;
                if (colors[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                colors[v] = c;
                choice[v] = c;
                advanced = true;
                break;
            }
        }
        if (advanced) {
            ++v;
            if (v < n)
                choice[v] = 0;
        } else {
            choice[v] = 0;
            --v;
        }
    }
    return codes;
}

} // namespace

std::optional<long long> bfs_distance(const Graph& g, int k, const Coloring& alpha,
                                      const Coloring& beta) {
    const int n = g.num_vertices();
    if (alpha.size() != n || beta.size() != n || alpha.k != k || beta.k != k)
        throw ArgumentError("endpoint colourings do not match the graph and palette");
    const long long space = state_space_size(n, k);
    check_endpoint(g, alpha, "alpha");
    check_endpoint(g, beta, "beta");
    const Encoding enc(n, k);
    const long long start = enc.encode(alpha.colors);
    const long long goal = enc.encode(beta.colors);
    if (start == goal)
        return 0;

    std::vector<long long> dist(static_cast<std::size_t>(space), -1);
    std::queue<long long> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        const long long code = q.front();
        q.pop();
        const std::vector<int> colors = enc.decode(code);
        for (int v = 0; v < n; ++v) {
            const long long base = code - static_cast<long long>(colors[v] - 1) * enc.pow[v];
            for (int c = 1; c <= k; ++c) {
                if (c == colors[v])
                    continue;
                bool clash = false;
                for (int w : g.neighbors(v))
                    if (colors[w] == c) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
                const long long next = base + static_cast<long long>(c - 1) * enc.pow[v];
                if (dist[next] < 0) {
                    dist[next] = dist[code] + 1;
                    if (next == goal)
                        return dist[next];
                    q.push(next);
                }
            }
        }
    }
    return std::nullopt;
}

ReconfSummary summarize(const Graph& g, int k) {
    const int n = g.num_vertices();
    const long long space = state_space_size(n, k);
    const Encoding enc(n, k);
    const std::vector<long long> codes = enumerate_proper(g, k, enc);

    ReconfSummary summary;
    summary.coloring_count = static_cast<long long>(codes.size());
    if (codes.empty())
        return summary;

    std::vector<int> id(static_cast<std::size_t>(space), -1);
    for (std::size_t i = 0; i < codes.size(); ++i)
        id[codes[i]] = static_cast<int>(i);

    // Explicit adjacency of R_k(G); each directed move is generated from its
    // own endpoint, so both directions appear.
    std::vector<std::vector<int>> adj(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const std::vector<int> colors = enc.decode(codes[i]);
        for (int v = 0; v < n; ++v) {
            const long long base = codes[i] - static_cast<long long>(colors[v] - 1) * enc.pow[v];
            for (int c = 1; c <= k; ++c) {
                if (c == colors[v])
                    continue;
                bool clash = false;
                for (int w : g.neighbors(v))
                    if (colors[w] == c) {
                        clash = true;
                        break;
                    }
                if (!clash)
                    adj[i].push_back(id[base + static_cast<long long>(c - 1) * enc.pow[v]]);
            }
        }
    }

    std::vector<int> component(codes.size(), -1);
    std::vector<int> bfs_dist(codes.size(), -1);
    std::vector<int> frontier;
    for (std::size_t s = 0; s < codes.size(); ++s) {
        if (component[s] >= 0)
            continue;
        const int comp = summary.component_count++;
        std::vector<int> members;
        frontier.assign(1, static_cast<int>(s));
        component[s] = comp;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int u : frontier) {
                members.push_back(u);
                for (int w : adj[u])
                    if (component[w] < 0) {
                        component[w] = comp;
                        next.push_back(w);
                    }
            }
            frontier = std::move(next);
        }
        // Exact diameter: BFS from every member.
        long long diameter = 0;
        for (int src : members) {
            for (int u : members)
                bfs_dist[u] = -1;
            std::queue<int> q;
            bfs_dist[src] = 0;
            q.push(src);
            long long ecc = 0;
            while (!q.empty()) {
                const int u = q.front();
                q.pop();
                ecc = std::max<long long>(ecc, bfs_dist[u]);
                for (int w : adj[u])
                    if (bfs_dist[w] < 0) {
                        bfs_dist[w] = bfs_dist[u] + 1;
                        q.push(w);
                    }
            }
            diameter = std::max(diameter, ecc);
        }
        summary.component_diameters.push_back(diameter);
        if (members.size() == 1)
            ++summary.frozen_count;
    }
    return summary;
}

DiameterReport diameter_check(const Graph& g, int k, const Params& params) {
    if (k < params.d + 1)
        throw ArgumentError("k must be at least d + 1");
    if (mad(g) > Rational(params.d) - params.epsilon)
        throw ArgumentError("mad exceeds d - epsilon; the diameter guarantee does not apply");

    const ReconfSummary summary = summarize(g, k);
    DiameterReport report;
    report.coloring_count = summary.coloring_count;
    report.component_count = summary.component_count;
    report.connected = summary.component_count == 1;
    for (long long diam : summary.component_diameters)
        report.diameter = std::max(report.diameter, diam);
    report.bound = length_bound(g.num_vertices(), params.d, params.epsilon).total_bound;
    report.within_bound = static_cast<u128>(report.diameter) <= report.bound;
    return report;
}

} // namespace reconf
