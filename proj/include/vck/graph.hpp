#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace vck {

// Sorted set of vertex ids.  Ids are small non-negative ints that stay stable
// across graph deletions, so a set taken from a graph remains meaningful in
// any graph derived from it by deleting other vertices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

    static VertexSet full_range(int n) {
        VertexSet s;
        s.ids_.resize(n);
        for (int i = 0; i < n; ++i) s.ids_[i] = i;
        return s;
    }

    bool contains(int v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    void insert(int v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }
    void erase(int v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    int size() const { return (int)ids_.size(); }
    bool empty() const { return ids_.empty(); }
    int min_id() const { return ids_.front(); }
    const std::vector<int>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }
    bool operator!=(const VertexSet& o) const { return ids_ != o.ids_; }
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

    VertexSet set_union(const VertexSet& o) const {
        VertexSet r;
        std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                       std::back_inserter(r.ids_));
        return r;
    }
    VertexSet set_minus(const VertexSet& o) const {
        VertexSet r;
        std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                            std::back_inserter(r.ids_));
        return r;
    }
    VertexSet set_intersect(const VertexSet& o) const {
        VertexSet r;
        std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                              std::back_inserter(r.ids_));
        return r;
    }
    bool is_subset_of(const VertexSet& o) const {
        return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
    }

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }
    std::vector<int> ids_;
};

// Simple undirected graph with stable vertex ids.  Deleting vertices never
// renumbers the survivors; edit operations return fresh values instead of
// mutating in place (add_edge exists only to build a graph up front).
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : live_(n, 1), adj_(n), live_count_(n) {}

    int id_bound() const { return (int)live_.size(); }
    int vertex_count() const { return live_count_; }
    long long edge_count() const { return edge_count_; }
    bool live(int v) const { return v >= 0 && v < id_bound() && live_[v]; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const {
        if (!live(u) || !live(v)) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        vs.reserve(live_count_);
        for (int v = 0; v < id_bound(); ++v)
            if (live_[v]) vs.push_back(v);
        return vs;
    }
    VertexSet vertex_set() const { return VertexSet(vertices()); }

    // New graph with the vertices of s (and their edges) deleted.
    UndirectedGraph without(const VertexSet& s) const;
    // New graph keeping only the vertices of s.
    UndirectedGraph induced(const VertexSet& s) const;

    // Components listed by ascending minimum vertex id; each component sorted.
    std::vector<VertexSet> connected_components() const;

    bool operator==(const UndirectedGraph& o) const {
        return live_ == o.live_ && adj_ == o.adj_;
    }

private:
    std::vector<char> live_;
    std::vector<std::vector<int>> adj_;
    int live_count_ = 0;
    long long edge_count_ = 0;
};

// Directed graph (no self-loops), same stable-id conventions as above.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(int n) : live_(n, 1), out_(n), in_(n), live_count_(n) {}

    int id_bound() const { return (int)live_.size(); }
    int vertex_count() const { return live_count_; }
    long long arc_count() const { return arc_count_; }
    bool live(int v) const { return v >= 0 && v < id_bound() && live_[v]; }

    void add_arc(int u, int v);
    bool has_arc(int u, int v) const {
        if (!live(u) || !live(v)) return false;
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        vs.reserve(live_count_);
        for (int v = 0; v < id_bound(); ++v)
            if (live_[v]) vs.push_back(v);
        return vs;
    }
    VertexSet vertex_set() const { return VertexSet(vertices()); }
    std::vector<std::pair<int, int>> arcs() const;

    DirectedGraph without(const VertexSet& s) const;

    bool operator==(const DirectedGraph& o) const {
        return live_ == o.live_ && out_ == o.out_;
    }

private:
    std::vector<char> live_;
    std::vector<std::vector<int>> out_, in_;
    int live_count_ = 0;
    long long arc_count_ = 0;
};

// External neighborhood N(s): vertices outside s with a neighbor inside s.
VertexSet open_neighborhood(const UndirectedGraph& g, const VertexSet& s);

bool is_vertex_cover(const UndirectedGraph& g, const VertexSet& x);

} // namespace vck
