#include "reconf/graph.hpp"

#include <algorithm>
#include <string>

namespace reconf {

Graph::Graph(int n) {
    if (n < 0)
        throw ArgumentError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ArgumentError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
        if (u == v)
            throw ArgumentError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += static_cast<long long>(list.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

VertexSubset VertexSubset::checked(std::vector<int> vs, int n) {
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= n)
            throw ArgumentError("vertex index out of range: " + std::to_string(vs[i]));
        if (i > 0 && vs[i] == vs[i - 1])
            throw ArgumentError("duplicate vertex in subset: " + std::to_string(vs[i]));
    }
    return VertexSubset(std::move(vs));
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Coloring::Coloring(std::vector<int> cs, int palette) : colors(std::move(cs)), k(palette) {
    if (k < 1)
        throw ArgumentError("palette size must be >= 1");
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] < 1 || colors[i] > k)
            throw ArgumentError("colour of vertex " + std::to_string(i + 1) + " outside 1.." +
                                std::to_string(k));
}

bool is_proper(const Graph& g, const Coloring& f) {
    if (f.size() != g.num_vertices())
        throw ArgumentError("colouring length does not match vertex count");
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u)) {
            if (v > u)
                break; // each edge checked once, lists are sorted
            if (f.colors[u] == f.colors[v])
                return false;
        }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& keep) {
    const int n = g.num_vertices();
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : keep) {
        if (v < 0 || v >= n)
            throw ArgumentError("subset vertex out of range: " + std::to_string(v));
        old_to_new[v] = next++;
    }
    std::vector<std::pair<int, int>> es;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && old_to_new[v] >= 0)
                es.emplace_back(old_to_new[u], old_to_new[v]);
    return {Graph::from_edges(keep.size(), es), std::move(old_to_new)};
}

} // namespace reconf
