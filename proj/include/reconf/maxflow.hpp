#pragma once

#include <vector>

namespace reconf {

/// Dinic blocking-flow max-flow over integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int node_count);

    /// Adds a directed arc; the reverse residual arc is created with
    /// capacity 0.
    void add_edge(int from, int to, long long cap);

    long long run(int source, int sink);

    /// Nodes reachable from the source in the residual graph after run();
    /// the source side of a minimum cut.
    std::vector<char> source_side(int source) const;

private:
    struct Arc {
        int to;
        long long cap;
    };

    bool build_levels(int source, int sink);
    long long augment(int v, int sink, long long limit);

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

} // namespace reconf
