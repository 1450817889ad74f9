#include "vck/flow.hpp"

#include <algorithm>

namespace vck {

bool Dinic::bfs(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::vector<int> q;
    size_t head = 0;
    level_[s] = 0;
    q.push_back(s);
    while (head < q.size()) {
        int v = q[head++];
        for (const auto& e : graph_[v])
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push_back(e.to);
            }
    }
    return level_[t] >= 0;
}

long long Dinic::dfs(int v, int t, long long pushed) {
    if (v == t) return pushed;
    for (int& i = iter_[v]; i < (int)graph_[v].size(); ++i) {
        Edge& e = graph_[v][i];
        if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
        long long got = dfs(e.to, t, std::min(pushed, e.cap));
        if (got > 0) {
            e.cap -= got;
            graph_[e.to][e.rev].cap += got;
            return got;
        }
    }
    return 0;
}

long long Dinic::max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
        iter_.assign(graph_.size(), 0);
        while (long long got = dfs(s, t, 1LL << 60)) total += got;
    }
    return total;
}

std::vector<char> Dinic::residual_reachable(int s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> q;
    size_t head = 0;
    seen[s] = 1;
    q.push_back(s);
    while (head < q.size()) {
        int v = q[head++];
        for (const auto& e : graph_[v])
            if (e.cap > 0 && !seen[e.to]) {
                seen[e.to] = 1;
                q.push_back(e.to);
            }
    }
    return seen;
}

std::vector<char> Dinic::residual_coreach(int t) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> q;
    size_t head = 0;
    seen[t] = 1;
    q.push_back(t);
    while (head < q.size()) {
        int v = q[head++];
        // u can step to v iff the arc u->v has residual capacity, which is
        // recorded on the reverse edge stored at v.
        for (const auto& e : graph_[v]) {
            const Edge& back = graph_[e.to][e.rev];
            if (back.cap > 0 && !seen[e.to]) {
                seen[e.to] = 1;
                q.push_back(e.to);
            }
        }
    }
    return seen;
}

} // namespace vck
