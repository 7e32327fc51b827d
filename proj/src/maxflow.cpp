#include "reconf/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace reconf {

MaxFlow::MaxFlow(int node_count)
    : out_(static_cast<std::size_t>(node_count)),
      level_(static_cast<std::size_t>(node_count)),
      iter_(static_cast<std::size_t>(node_count)) {}

void MaxFlow::add_edge(int from, int to, long long cap) {
    out_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    out_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
}

bool MaxFlow::build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int id : out_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

long long MaxFlow::augment(int v, int sink, long long limit) {
    if (v == sink)
        return limit;
    for (std::size_t& i = iter_[v]; i < out_[v].size(); ++i) {
        const int id = out_[v][i];
        Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
            const long long pushed = augment(a.to, sink, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                arcs_[id ^ 1].cap += pushed;
                return pushed;
            }
        }
    }
    level_[v] = -1;
    return 0;
}

long long MaxFlow::run(int source, int sink) {
    long long total = 0;
    while (build_levels(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (true) {
            const long long pushed =
                augment(source, sink, std::numeric_limits<long long>::max());
            if (pushed == 0)
                break;
            total += pushed;
        }
    }
    return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
    std::vector<char> reach(out_.size(), 0);
    std::queue<int> q;
    reach[source] = 1;
    q.push(source);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int id : out_[v]) {
            const Arc& a = arcs_[id];
            if (a.cap > 0 && !reach[a.to]) {
                reach[a.to] = 1;
                q.push(a.to);
            }
        }
    }
    return reach;
}

} // namespace reconf
