#pragma once

#include <utility>
#include <vector>

#include "reconf/errors.hpp"

namespace reconf {

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted
/// ascending with no self-loops and no parallel edges; immutable once built,
/// so instances can be shared across threads freely.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds from an edge list. Duplicate edges (in either orientation)
    /// collapse silently; self-loops and out-of-range endpoints throw.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long long num_edges() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    /// Edge list with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

/// Ascending set of distinct vertex indices of some host graph.
struct VertexSubset {
    std::vector<int> members;

    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> ms) : members(std::move(ms)) {}

    /// Sorts, rejects duplicates and indices outside 0..n-1.
    static VertexSubset checked(std::vector<int> vs, int n);

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const;
    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }
    bool operator==(const VertexSubset&) const = default;
};

/// Total assignment of colours 1..k. Properness is not an invariant here;
/// use is_proper.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    Coloring() = default;
    Coloring(std::vector<int> cs, int palette);

    int size() const { return static_cast<int>(colors.size()); }
    bool operator==(const Coloring&) const = default;
};

/// True iff no edge of g is monochromatic under f.
bool is_proper(const Graph& g, const Coloring& f);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for dropped vertices
};

/// Induced subgraph on `keep`, relabelled in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& keep);

} // namespace reconf
