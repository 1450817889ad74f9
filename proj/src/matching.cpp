#include "vck/matching.hpp"

#include <functional>

#include "vck/errors.hpp"

namespace vck {

void Matching::add(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= id_bound() || v >= id_bound())
        throw precondition_error("Matching::add: bad endpoints");
    if (mate_[u] != -1 || mate_[v] != -1)
        throw precondition_error("Matching::add: endpoint already matched");
    mate_[u] = v;
    mate_[v] = u;
    ++size_;
}

void Matching::remove(int u, int v) {
    if (u < 0 || v < 0 || u >= id_bound() || v >= id_bound() || mate_[u] != v)
        throw precondition_error("Matching::remove: edge not present");
    mate_[u] = -1;
    mate_[v] = -1;
    --size_;
}

std::vector<std::pair<int, int>> Matching::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(size_);
    for (int v = 0; v < id_bound(); ++v)
        if (mate_[v] > v) es.emplace_back(v, mate_[v]);
    return es;
}

VertexSet Matching::covered_vertices() const {
    std::vector<int> vs;
    for (int v = 0; v < id_bound(); ++v)
        if (mate_[v] != -1) vs.push_back(v);
    return VertexSet(std::move(vs));
}

Matching Matching::restricted_to(const VertexSet& keep) const {
    Matching m(id_bound());
    for (auto [u, v] : edges())
        if (keep.contains(u) && keep.contains(v)) m.add(u, v);
    return m;
}

bool Matching::valid_for(const UndirectedGraph& g) const {
    if (id_bound() < g.id_bound()) return false;
    for (auto [u, v] : edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

namespace {

struct CompactView {
    std::vector<int> to_local; // id -> local index, -1 for dead
    std::vector<int> to_id;    // local index -> id
    std::vector<std::vector<int>> adj;

    explicit CompactView(const UndirectedGraph& g) : to_local(g.id_bound(), -1) {
        to_id = g.vertices();
        for (size_t i = 0; i < to_id.size(); ++i) to_local[to_id[i]] = (int)i;
        adj.resize(to_id.size());
        for (size_t i = 0; i < to_id.size(); ++i)
            for (int u : g.neighbors(to_id[i])) adj[i].push_back(to_local[u]);
    }
};

// Blossom-contracting augmenting path search.  find_path grows an alternating
// tree from root; odd cycles are shrunk by resetting base[] to the cycle's
// stem so the search can pass through them in both directions.
struct BlossomSolver {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, p, base, queue_buf;
    std::vector<char> used, in_blossom;

    explicit BlossomSolver(const std::vector<std::vector<int>>& adj_)
        : n((int)adj_.size()), adj(adj_), match(n, -1), p(n, -1), base(n),
          used(n, 0), in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        queue_buf.clear();
        size_t head = 0;
        used[root] = 1;
        queue_buf.push_back(root);
        while (head < queue_buf.size()) {
            int v = queue_buf[head++];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    // even-even edge closes an odd cycle: contract it
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue_buf.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to; // exposed: augmenting path found
                    used[match[to]] = 1;
                    queue_buf.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void flip_along(int v) {
        while (v != -1) {
            int pv = p[v], next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void run() {
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                int end = find_path(v);
                if (end != -1) flip_along(end);
            }
    }
};

Matching solve_from(const UndirectedGraph& g, const Matching* seed) {
    CompactView cv(g);
    BlossomSolver bs(cv.adj);
    if (seed) {
        for (auto [u, v] : seed->edges()) {
            bs.match[cv.to_local[u]] = cv.to_local[v];
            bs.match[cv.to_local[v]] = cv.to_local[u];
        }
    }
    // cheap greedy start; only pairs up currently exposed vertices
    for (int v = 0; v < bs.n; ++v)
        if (bs.match[v] == -1)
            for (int u : cv.adj[v])
                if (bs.match[u] == -1) {
                    bs.match[v] = u;
                    bs.match[u] = v;
                    break;
                }
    bs.run();
    Matching m(g.id_bound());
    for (int v = 0; v < bs.n; ++v)
        if (bs.match[v] > v) m.add(cv.to_id[v], cv.to_id[bs.match[v]]);
    return m;
}

} // namespace

Matching maximum_matching(const UndirectedGraph& g) { return solve_from(g, nullptr); }

Matching augment_to_maximum(const UndirectedGraph& g, const Matching& m0) {
    if (!m0.valid_for(g))
        throw precondition_error("augment_to_maximum: m0 is not a matching of g");
    return solve_from(g, &m0);
}

BipartiteMatching hopcroft_karp(const BipartiteGraph& g) {
    const int INF = 1 << 30;
    BipartiteMatching m;
    m.left_mate.assign(g.n_left, -1);
    m.right_mate.assign(g.n_right, -1);
    std::vector<int> dist(g.n_left, 0);

    auto bfs = [&]() {
        std::vector<int> q;
        size_t head = 0;
        bool reachable_exposed = false;
        for (int u = 0; u < g.n_left; ++u) {
            if (m.left_mate[u] == -1) {
                dist[u] = 0;
                q.push_back(u);
            } else
                dist[u] = INF;
        }
        while (head < q.size()) {
            int u = q[head++];
            for (int w : g.adj[u]) {
                int v = m.right_mate[w];
                if (v == -1)
                    reachable_exposed = true;
                else if (dist[v] == INF) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        return reachable_exposed;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int w : g.adj[u]) {
            int v = m.right_mate[w];
            if (v == -1 || (dist[v] == dist[u] + 1 && dfs(v))) {
                m.left_mate[u] = w;
                m.right_mate[w] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };

    while (bfs())
        for (int u = 0; u < g.n_left; ++u)
            if (m.left_mate[u] == -1 && dfs(u)) ++m.size;
    return m;
}

BipartiteCover konig_cover(const BipartiteGraph& g, const BipartiteMatching& m) {
    std::vector<char> zl(g.n_left, 0), zr(g.n_right, 0);
    std::vector<int> q;
    size_t head = 0;
    for (int u = 0; u < g.n_left; ++u)
        if (m.left_mate[u] == -1) {
            zl[u] = 1;
            q.push_back(u);
        }
    while (head < q.size()) {
        int u = q[head++];
        for (int w : g.adj[u]) {
            if (zr[w]) continue;
            zr[w] = 1;
            int v = m.right_mate[w];
            if (v != -1 && !zl[v]) {
                zl[v] = 1;
                q.push_back(v);
            }
        }
    }
    BipartiteCover c;
    c.left.resize(g.n_left);
    c.right.resize(g.n_right);
    for (int u = 0; u < g.n_left; ++u) c.left[u] = !zl[u];
    for (int w = 0; w < g.n_right; ++w) c.right[w] = zr[w];
    return c;
}

HallResult hall_match_singletons(const UndirectedGraph& g, const VertexSet& singles) {
    for (int v : singles) {
        if (!g.live(v))
            throw precondition_error("hall_match_singletons: dead vertex in set");
        for (int u : g.neighbors(v))
            if (singles.contains(u))
                throw precondition_error("hall_match_singletons: set not independent");
    }
    VertexSet rights = open_neighborhood(g, singles);
    std::vector<int> right_ids(rights.begin(), rights.end());
    std::vector<int> right_rank(g.id_bound(), -1);
    for (size_t i = 0; i < right_ids.size(); ++i) right_rank[right_ids[i]] = (int)i;

    BipartiteGraph bg;
    bg.n_left = singles.size();
    bg.n_right = (int)right_ids.size();
    bg.adj.resize(bg.n_left);
    {
        int li = 0;
        for (int v : singles) {
            for (int u : g.neighbors(v)) bg.adj[li].push_back(right_rank[u]);
            ++li;
        }
    }

    auto bm = hopcroft_karp(bg);
    HallResult res;
    res.matching = Matching(g.id_bound());
    if (bm.size == bg.n_left) {
        res.saturated = true;
        int li = 0;
        for (int v : singles) {
            res.matching.add(v, right_ids[bm.left_mate[li]]);
            ++li;
        }
        return res;
    }
    // Exposed lefts plus everything alternating-reachable from them forms a
    // set whose neighborhood is the reached (all matched) rights, one short
    // per exposed vertex.
    auto cover = konig_cover(bg, bm);
    std::vector<int> witness;
    {
        int li = 0;
        for (int v : singles) {
            if (!cover.left[li]) witness.push_back(v);
            ++li;
        }
    }
    res.saturated = false;
    res.violating = VertexSet(std::move(witness));
    int li = 0;
    for (int v : singles) {
        if (bm.left_mate[li] != -1) res.matching.add(v, right_ids[bm.left_mate[li]]);
        ++li;
    }
    return res;
}

} // namespace vck
