#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "vck/field_matrix.hpp"
#include "vck/graph.hpp"

namespace vck {

// Family of vertex sets of size 1..3, kept sorted (by size, then ids) and
// de-duplicated.
struct TripleFamily {
    std::vector<VertexSet> sets;

    void add(const VertexSet& t);
    void canonicalize();
    int size() const { return (int)sets.size(); }
    auto begin() const { return sets.begin(); }
    auto end() const { return sets.end(); }
    bool operator==(const TripleFamily& o) const { return sets == o.sets; }
};

// Three disjoint copies of H extended by ell+1 extra sources feeding S_H.
// A set of D-vertices is independent in the associated gammoid iff it can be
// linked to the source set by fully vertex-disjoint paths.
struct GammoidInstance {
    DirectedGraph d;
    VertexSet sources; // the 3*(ell+1) added source vertices
    int ell = 0;
    std::vector<int> h_vertices; // sorted original ids of V(H)
    int copy_stride = 0;         // |V(H)| + ell + 1

    int copy_vertex(int h_vertex, int copy) const;  // copy in 1..3
    int source_vertex(int index, int copy) const;   // index in 1..ell+1
    bool is_source(int d_vertex) const { return sources.contains(d_vertex); }
    int copy_of(int d_vertex) const { return d_vertex / copy_stride + 1; }
    // original H-vertex id, or source index for source vertices
    int origin_of(int d_vertex) const;
};

GammoidInstance build_gammoid_digraph(const DirectedGraph& h, const VertexSet& s_h,
                                      int ell);

// Random matrix representing the gammoid of (d, sources): built as the dual
// of a randomized transversal-matroid representation, so reported-independent
// always implies linked, while a linked set can be misreported dependent with
// probability O(poly(n)/prime).  One row per source, one column per vertex of
// d in ascending id order.
FieldMatrix gammoid_representation(const DirectedGraph& d, const VertexSet& sources,
                                   uint64_t prime, std::mt19937_64& rng,
                                   int* attempts = nullptr);

FieldMatrix gammoid_matrix(const GammoidInstance& inst, uint64_t seed,
                           uint64_t prime = default_prime);

// Flow ground truth for the gammoid: can t be joined to the sources by |t|
// fully vertex-disjoint paths (length 0 allowed)?
bool linked_to(const DirectedGraph& d, const VertexSet& sources, const VertexSet& t);

// Y(T): columns of the lifted copy of T in the 3-copy digraph.
std::array<int, 3> lift_columns(const GammoidInstance& inst, const VertexSet& t);

// Keep a spanning subset of the family's exterior-cube vectors: for each
// 3-set of columns take all 3x3 minors as a vector and greedily keep the
// linearly independent ones.  Any kept-out member Y has its extension
// behaviour covered: whenever X (|X| <= r, disjoint from Y) extends Y
// independently, it also extends some kept member.
struct RepFamilySelection {
    std::vector<int> kept; // indices into the input family
    int discarded_dependent = 0;
};
RepFamilySelection representative_family(const FieldMatrix& a,
                                         const std::vector<std::array<int, 3>>& family,
                                         int r);

struct RepTriplesStats {
    long long sz_degree = 0; // numerator of the failure-probability bound
    long double error_bound = 0;
    int discarded_dependent = 0;
    int attempts = 1;
};

// Representative subfamily of at most C(3*ell+3, 3) sets: whenever some
// member of family is fully reachable from s_h in h minus a closest set of
// at most ell vertices, so is some member of the result (up to the reported
// randomized error bound).
TripleFamily representative_triples(const DirectedGraph& h, const VertexSet& s_h, int ell,
                                    const TripleFamily& family, uint64_t seed,
                                    uint64_t prime = default_prime,
                                    RepTriplesStats* stats = nullptr);

} // namespace vck
