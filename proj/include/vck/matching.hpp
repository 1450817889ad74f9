#pragma once

#include <utility>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Matching stored as a mate table over stable vertex ids.
class Matching {
public:
    Matching() = default;
    explicit Matching(int id_bound) : mate_(id_bound, -1) {}

    int id_bound() const { return (int)mate_.size(); }
    int mate(int v) const { return mate_[v]; }
    bool covers(int v) const { return v >= 0 && v < id_bound() && mate_[v] != -1; }
    int size() const { return size_; }

    void add(int u, int v);
    void remove(int u, int v);

    std::vector<std::pair<int, int>> edges() const; // u < v, sorted
    VertexSet covered_vertices() const;

    // Drop every edge with an endpoint outside keep.
    Matching restricted_to(const VertexSet& keep) const;

    bool valid_for(const UndirectedGraph& g) const;

    bool operator==(const Matching& o) const { return mate_ == o.mate_; }

private:
    std::vector<int> mate_;
    int size_ = 0;
};

// Maximum matching via blossom contraction.
Matching maximum_matching(const UndirectedGraph& g);

// Grow m0 to a maximum matching by augmenting paths only; every vertex
// covered by m0 stays covered.
Matching augment_to_maximum(const UndirectedGraph& g, const Matching& m0);

// Matching of the independent set `singles` into its neighborhood.  When the
// set cannot be saturated, `violating` is a subset I' of `singles` with
// |N(I')| < |I'|.
struct HallResult {
    bool saturated = false;
    Matching matching;
    VertexSet violating;
};
HallResult hall_match_singletons(const UndirectedGraph& g, const VertexSet& singles);

// Bipartite workhorse shared by the LP solver and the Hall matcher.
struct BipartiteGraph {
    int n_left = 0, n_right = 0;
    std::vector<std::vector<int>> adj; // left index -> right indices
};

struct BipartiteMatching {
    std::vector<int> left_mate, right_mate; // -1 when exposed
    int size = 0;
};

BipartiteMatching hopcroft_karp(const BipartiteGraph& g);

// Minimum vertex cover of a bipartite graph read off a maximum matching:
// side flags sized n_left / n_right.
struct BipartiteCover {
    std::vector<char> left, right;
};
BipartiteCover konig_cover(const BipartiteGraph& g, const BipartiteMatching& m);

} // namespace vck
