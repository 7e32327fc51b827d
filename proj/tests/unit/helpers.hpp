#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "reconf/generate.hpp"
#include "reconf/graph.hpp"

namespace reconf::testing {

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph::from_edges(n, std::vector<std::pair<int, int>>(edges));
}

inline Coloring col(std::vector<int> colors, int k) {
    return Coloring(std::move(colors), k);
}

// Seeded G(n, p)-style graph with p = num/den.
inline Graph random_graph(int n, int num, int den, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_below(rng, static_cast<std::uint64_t>(den)) <
                static_cast<std::uint64_t>(num))
                es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// Mixed bag of small instances for property tests.
inline std::vector<Graph> small_corpus() {
    std::vector<Graph> gs;
    for (int n = 1; n <= 10; ++n) {
        gs.push_back(make_path(n));
        gs.push_back(make_cycle(n));
        gs.push_back(make_star(n));
    }
    for (int n = 1; n <= 6; ++n)
        gs.push_back(make_complete(n));
    gs.push_back(make_grid(2, 3));
    gs.push_back(make_grid(3, 3));
    gs.push_back(make_grid(2, 5));
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 20; ++i)
        gs.push_back(random_graph(4 + static_cast<int>(uniform_below(rng, 7)), 1 + i % 8, 10, rng));
    for (std::uint64_t s = 0; s < 6; ++s) {
        gs.push_back(make_forest_union(12, 1, s));
        gs.push_back(make_forest_union(12, 2, s));
    }
    return gs;
}

} // namespace reconf::testing
