#include "reconf/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace reconf {

namespace {

void require_positive(int value, const char* name) {
    if (value < 1)
        throw ArgumentError(std::string(name) + " must be >= 1");
}

// Union-find with path halving.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Graph make_path(int n) {
    require_positive(n, "n");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph make_cycle(int n) {
    require_positive(n, "n");
    if (n <= 2)
        return make_path(n);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph make_complete(int n) {
    require_positive(n, "n");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph make_grid(int rows, int cols) {
    require_positive(rows, "rows");
    require_positive(cols, "cols");
    std::vector<std::pair<int, int>> es;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                es.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, es);
}

Graph make_star(int n) {
    require_positive(n, "n");
    std::vector<std::pair<int, int>> es;
    for (int leaf = 1; leaf < n; ++leaf)
        es.emplace_back(0, leaf);
    return Graph::from_edges(n, es);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph make_forest_union(int n, int t, std::uint64_t seed) {
    require_positive(n, "n");
    require_positive(t, "t");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int f = 0; f < t; ++f) {
        DisjointSets ds(n);
        int added = 0;
        while (added < n - 1) {
            const int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            if (u != v && ds.unite(u, v)) {
                es.emplace_back(u, v);
                ++added;
            }
        }
    }
    return Graph::from_edges(n, es);
}

Coloring random_proper_coloring(const Graph& g, int k, std::mt19937_64& rng) {
    const int n = g.num_vertices();
    if (k < 1)
        throw ArgumentError("palette size must be >= 1");

    // Min-degree removal order; colouring in reverse sees at most
    // degeneracy(g) already-coloured neighbours per vertex.
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best]))
                best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w])
                --deg[w];
    }

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<int> free;
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[i];
        std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
        for (int w : g.neighbors(v))
            if (colors[w] != 0)
                used[colors[w]] = 1;
        free.clear();
        for (int c = 1; c <= k; ++c)
            if (!used[c])
                free.push_back(c);
        if (free.empty())
            throw ArgumentError("k = " + std::to_string(k) +
                                " is too small for a greedy proper colouring");
        colors[v] = free[uniform_below(rng, free.size())];
    }
    return Coloring(std::move(colors), k);
}

} // namespace reconf
