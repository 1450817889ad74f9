#pragma once

// Shared fixtures and slow-but-simple reference implementations used to
// cross-check the library.  Everything here favors obviousness over speed
// and is deliberately independent of the algorithms under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "vck/graph.hpp"

namespace testutil {

using vck::UndirectedGraph;
using vck::VertexSet;

inline UndirectedGraph path_graph(int n) {
    UndirectedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline UndirectedGraph cycle_graph(int n) {
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline UndirectedGraph complete_graph(int n) {
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline UndirectedGraph star_graph(int leaves) {
    UndirectedGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

// Bernoulli(p) graph from a caller-owned generator.
inline UndirectedGraph rand_graph(std::mt19937_64& rng, int n, double p) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((double)(rng() >> 11) * (1.0 / 9007199254740992.0) < p) g.add_edge(u, v);
    return g;
}

// Random spanning tree plus Bernoulli extras: always connected.
inline UndirectedGraph rand_connected_graph(std::mt19937_64& rng, int n, double p) {
    UndirectedGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge((int)(rng() % (uint64_t)v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) &&
                (double)(rng() >> 11) * (1.0 / 9007199254740992.0) < p)
                g.add_edge(u, v);
    return g;
}

inline vck::DirectedGraph rand_digraph(std::mt19937_64& rng, int n, double p) {
    vck::DirectedGraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (double)(rng() >> 11) * (1.0 / 9007199254740992.0) < p)
                d.add_arc(u, v);
    return d;
}

// ---- reference computations (exponential; keep n small) ----

inline bool mask_is_cover(const UndirectedGraph& g, uint32_t mask,
                          const std::vector<int>& ids) {
    std::vector<char> in(g.id_bound(), 0);
    for (size_t i = 0; i < ids.size(); ++i)
        if (mask & (1u << i)) in[ids[i]] = 1;
    for (int u : ids)
        for (int v : g.neighbors(u))
            if (u < v && !in[u] && !in[v]) return false;
    return true;
}

// Minimum vertex cover size by direct subset scan.
inline int ref_min_vc(const UndirectedGraph& g) {
    std::vector<int> ids = g.vertex_set().ids();
    int n = (int)ids.size();
    int best = n;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best) continue;
        if (mask_is_cover(g, mask, ids)) best = pc;
    }
    return best;
}

// All minimum vertex covers, as sorted id sets.
inline std::vector<VertexSet> ref_all_min_vcs(const UndirectedGraph& g) {
    std::vector<int> ids = g.vertex_set().ids();
    int n = (int)ids.size();
    int best = ref_min_vc(g);
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != best) continue;
        if (!mask_is_cover(g, mask, ids)) continue;
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(ids[i]);
        out.push_back(VertexSet{v});
    }
    return out;
}

// Maximum matching size by memoized recursion over the uncovered vertex with
// the smallest id; independent of the blossom machinery.
inline int ref_max_matching(const UndirectedGraph& g) {
    std::vector<int> ids = g.vertex_set().ids();
    int n = (int)ids.size();
    std::vector<int> pos(g.id_bound(), -1);
    for (int i = 0; i < n; ++i) pos[ids[i]] = i;
    std::map<uint32_t, int> memo;
    std::function<int(uint32_t)> go = [&](uint32_t used) -> int {
        int i = -1;
        for (int j = 0; j < n; ++j)
            if (!(used & (1u << j))) {
                i = j;
                break;
            }
        if (i == -1) return 0;
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        uint32_t skip = used | (1u << i);
        int best = go(skip);
        for (int v : g.neighbors(ids[i])) {
            int j = pos[v];
            if (used & (1u << j)) continue;
            best = std::max(best, 1 + go(skip | (1u << j)));
        }
        memo.emplace(used, best);
        return best;
    };
    return go(0);
}

// Twice the LP optimum by scanning all {0, 1/2, 1} assignments (the LP of
// vertex cover always has a half-integral optimum).
inline int ref_lp_doubled(const UndirectedGraph& g) {
    std::vector<int> ids = g.vertex_set().ids();
    int n = (int)ids.size();
    std::vector<int> x(n, 0);
    int best = 2 * n;
    std::function<void(int, int)> go = [&](int i, int cost) {
        if (cost >= best) return;
        if (i == n) {
            for (int a = 0; a < n; ++a)
                for (int v : g.neighbors(ids[a])) {
                    if (ids[a] > v) continue;
                    int b = (int)(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
                    if (x[a] + x[b] < 2) return;
                }
            best = cost;
            return;
        }
        for (int val : {0, 1, 2}) {
            x[i] = val;
            go(i + 1, cost + val);
        }
        x[i] = 0;
    };
    go(0, 0);
    return best;
}

// Is x an S,T-vertex-separator: no path from S \ x to T \ x in d - x.
inline bool ref_is_separator(const vck::DirectedGraph& d, const VertexSet& s,
                             const VertexSet& t, const VertexSet& x) {
    std::vector<char> blocked(d.id_bound(), 0), seen(d.id_bound(), 0);
    for (int v : x.ids()) blocked[v] = 1;
    std::vector<int> stack;
    for (int v : s.ids())
        if (!blocked[v]) {
            stack.push_back(v);
            seen[v] = 1;
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : d.out_neighbors(u))
            if (!blocked[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (int v : t.ids())
        if (!blocked[v] && seen[v]) return false;
    return true;
}

// Minimum separator size by scanning all vertex subsets; Menger then gives
// the maximum number of vertex-disjoint S-to-T paths.
inline int ref_min_separator_size(const vck::DirectedGraph& d, const VertexSet& s,
                                  const VertexSet& t) {
    std::vector<int> ids = d.vertex_set().ids();
    int n = (int)ids.size();
    int best = n + 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best) continue;
        std::vector<int> xs;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) xs.push_back(ids[i]);
        if (ref_is_separator(d, s, t, VertexSet{xs})) best = pc;
    }
    return best;
}

// T can be linked to S by |T| fully vertex-disjoint paths iff no separator
// smaller than |T| exists (vertex Menger, with T itself always separating).
inline bool ref_linked(const vck::DirectedGraph& d, const VertexSet& s, const VertexSet& t) {
    return ref_min_separator_size(d, s, t) == (int)t.size();
}

} // namespace testutil
