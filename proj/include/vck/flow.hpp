#pragma once

#include <vector>

namespace vck {

// Small Dinic max-flow; also exposes the two residual reachability sets used
// to read off extremal minimum cuts.
class Dinic {
public:
    explicit Dinic(int n) : graph_(n) {}

    void add_edge(int u, int v, long long cap) {
        graph_[u].push_back({v, cap, (int)graph_[v].size()});
        graph_[v].push_back({u, 0, (int)graph_[u].size() - 1});
    }

    long long max_flow(int s, int t);

    // Nodes reachable from s in the residual network.
    std::vector<char> residual_reachable(int s) const;
    // Nodes that can still reach t in the residual network.
    std::vector<char> residual_coreach(int t) const;

private:
    struct Edge {
        int to;
        long long cap;
        int rev;
    };
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long pushed);

    std::vector<std::vector<Edge>> graph_;
    std::vector<int> level_, iter_;
};

} // namespace vck
