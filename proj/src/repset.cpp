#include "vck/repset.hpp"

#include <algorithm>

#include "vck/errors.hpp"
#include "vck/flow.hpp"

namespace vck {

void TripleFamily::add(const VertexSet& t) {
    sets.push_back(t);
    canonicalize();
}

void TripleFamily::canonicalize() {
    std::sort(sets.begin(), sets.end(), [](const VertexSet& x, const VertexSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.ids() < y.ids();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

int GammoidInstance::copy_vertex(int h_vertex, int copy) const {
    auto it = std::lower_bound(h_vertices.begin(), h_vertices.end(), h_vertex);
    if (it == h_vertices.end() || *it != h_vertex)
        throw precondition_error("copy_vertex: not an H-vertex");
    return (copy - 1) * copy_stride + (int)(it - h_vertices.begin());
}

int GammoidInstance::source_vertex(int index, int copy) const {
    if (index < 1 || index > ell + 1 || copy < 1 || copy > 3)
        throw precondition_error("source_vertex: index out of range");
    return (copy - 1) * copy_stride + (int)h_vertices.size() + index - 1;
}

int GammoidInstance::origin_of(int d_vertex) const {
    int local = d_vertex % copy_stride;
    if (local < (int)h_vertices.size()) return h_vertices[local];
    return local - (int)h_vertices.size() + 1; // source index, 1-based
}

GammoidInstance build_gammoid_digraph(const DirectedGraph& h, const VertexSet& s_h,
                                      int ell) {
    if (ell < 0) throw precondition_error("build_gammoid_digraph: negative ell");
    for (int v : s_h)
        if (!h.live(v)) throw precondition_error("build_gammoid_digraph: s_h outside h");

    GammoidInstance inst;
    inst.ell = ell;
    inst.h_vertices = h.vertices();
    inst.copy_stride = (int)inst.h_vertices.size() + ell + 1;
    inst.d = DirectedGraph(3 * inst.copy_stride);
    for (int copy = 1; copy <= 3; ++copy) {
        for (auto [u, v] : h.arcs())
            inst.d.add_arc(inst.copy_vertex(u, copy), inst.copy_vertex(v, copy));
        for (int i = 1; i <= ell + 1; ++i) {
            int src = inst.source_vertex(i, copy);
            inst.sources.insert(src);
            for (int s : s_h) inst.d.add_arc(src, inst.copy_vertex(s, copy));
        }
    }
    return inst;
}

namespace {

uint64_t draw_nonzero(std::mt19937_64& rng, uint64_t p) {
    uint64_t span = p - 1;
    uint64_t bound = UINT64_MAX - UINT64_MAX % span;
    for (;;) {
        uint64_t x = rng();
        if (x < bound) return x % span + 1;
    }
}

} // namespace

FieldMatrix gammoid_representation(const DirectedGraph& d, const VertexSet& sources,
                                   uint64_t prime, std::mt19937_64& rng, int* attempts) {
    for (int v : sources)
        if (!d.live(v))
            throw precondition_error("gammoid_representation: source outside d");
    auto ids = d.vertices();
    int n = (int)ids.size();
    std::vector<int> rank_of(d.id_bound() == 0 ? 0 : d.id_bound(), -1);
    for (int i = 0; i < n; ++i) rank_of[ids[i]] = i;

    std::vector<int> right; // non-source vertices, compact indices
    for (int i = 0; i < n; ++i)
        if (!sources.contains(ids[i])) right.push_back(i);
    int r = (int)right.size();

    for (int attempt = 1; attempt <= 16; ++attempt) {
        // Transversal matroid of: ground V(d) vs copies of V(d)\S, where v is
        // adjacent to the copy of u iff v==u or (v,u) is an arc.  Random
        // nonzero entries make column independence match matchability (whp).
        FieldMatrix b(r, n, prime);
        for (int i = 0; i < r; ++i) {
            int u = ids[right[i]];
            b.at(i, right[i]) = draw_nonzero(rng, prime);
            for (int v : d.in_neighbors(u)) b.at(i, rank_of[v]) = draw_nonzero(rng, prime);
        }
        auto pivots = b.rref();
        if ((int)pivots.size() < r) continue; // unlucky draw, resample
        if (attempts) *attempts = attempt;

        // Dualize [I | P] -> [-P^T | I]: the dual of the transversal matroid
        // is exactly the strict gammoid of (d, sources).
        std::vector<char> is_pivot(n, 0);
        for (int c : pivots) is_pivot[c] = 1;
        std::vector<int> nonpivots;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) nonpivots.push_back(c);
        FieldMatrix dual((int)nonpivots.size(), n, prime);
        for (size_t i = 0; i < nonpivots.size(); ++i) {
            dual.at((int)i, nonpivots[i]) = 1;
            for (int t = 0; t < r; ++t) {
                uint64_t x = b.at(t, nonpivots[i]);
                dual.at((int)i, pivots[t]) = x == 0 ? 0 : prime - x;
            }
        }
        return dual;
    }
    throw internal_error("gammoid_representation: matrix stayed rank-deficient");
}

FieldMatrix gammoid_matrix(const GammoidInstance& inst, uint64_t seed, uint64_t prime) {
    std::mt19937_64 rng(seed);
    return gammoid_representation(inst.d, inst.sources, prime, rng);
}

bool linked_to(const DirectedGraph& d, const VertexSet& sources, const VertexSet& t) {
    auto ids = d.vertices();
    int n = (int)ids.size();
    std::vector<int> rank_of(d.id_bound() == 0 ? 0 : d.id_bound(), -1);
    for (int i = 0; i < n; ++i) rank_of[ids[i]] = i;
    for (int v : t)
        if (!d.live(v)) throw precondition_error("linked_to: t outside d");

    Dinic flow(2 * n + 2);
    int src = 2 * n, sink = 2 * n + 1;
    for (int i = 0; i < n; ++i) flow.add_edge(2 * i, 2 * i + 1, 1);
    for (auto [u, v] : d.arcs()) flow.add_edge(2 * rank_of[u] + 1, 2 * rank_of[v], 1);
    for (int s : sources) flow.add_edge(src, 2 * rank_of[s], 1);
    for (int v : t) flow.add_edge(2 * rank_of[v] + 1, sink, 1);
    return flow.max_flow(src, sink) == (long long)t.size();
}

std::array<int, 3> lift_columns(const GammoidInstance& inst, const VertexSet& t) {
    if (t.empty() || t.size() > 3)
        throw precondition_error("lift_columns: set size must be 1..3");
    const auto& ids = t.ids();
    if (t.size() == 3)
        return {inst.copy_vertex(ids[0], 1), inst.copy_vertex(ids[1], 2),
                inst.copy_vertex(ids[2], 3)};
    if (t.size() == 2)
        return {inst.copy_vertex(ids[0], 1), inst.copy_vertex(ids[1], 2),
                inst.copy_vertex(ids[1], 3)};
    return {inst.copy_vertex(ids[0], 1), inst.copy_vertex(ids[0], 2),
            inst.copy_vertex(ids[0], 3)};
}

RepFamilySelection representative_family(const FieldMatrix& a,
                                         const std::vector<std::array<int, 3>>& family,
                                         int r) {
    int m = a.rows();
    if (m != r + 3)
        throw precondition_error("representative_family: matrix must have r+3 rows");
    if (a.rank() != m)
        throw precondition_error("representative_family: matrix must have full row rank");
    uint64_t p = a.prime();

    // index row triples i<j<k of the exterior cube
    int dim = m * (m - 1) * (m - 2) / 6;
    RepFamilySelection sel;
    std::vector<std::vector<uint64_t>> basis;   // reduced, leading entry 1
    std::vector<int> basis_pivot;

    std::vector<uint64_t> w((size_t)dim);
    for (size_t fi = 0; fi < family.size(); ++fi) {
        const auto& cols = family[fi];
        if (cols[0] == cols[1] || cols[0] == cols[2] || cols[1] == cols[2])
            throw precondition_error("representative_family: columns not distinct");
        // wedge vector: all 3x3 minors of the chosen column triple
        int pos = 0;
        bool nonzero = false;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    uint64_t a00 = a.at(i, cols[0]), a01 = a.at(i, cols[1]),
                             a02 = a.at(i, cols[2]);
                    uint64_t a10 = a.at(j, cols[0]), a11 = a.at(j, cols[1]),
                             a12 = a.at(j, cols[2]);
                    uint64_t a20 = a.at(k, cols[0]), a21 = a.at(k, cols[1]),
                             a22 = a.at(k, cols[2]);
                    uint64_t det = mul_mod(a00, sub_mod(mul_mod(a11, a22, p),
                                                        mul_mod(a12, a21, p), p), p);
                    det = add_mod(det, mul_mod(a01, sub_mod(mul_mod(a12, a20, p),
                                                            mul_mod(a10, a22, p), p), p), p);
                    det = add_mod(det, mul_mod(a02, sub_mod(mul_mod(a10, a21, p),
                                                            mul_mod(a11, a20, p), p), p), p);
                    w[pos++] = det;
                    if (det) nonzero = true;
                }
        if (!nonzero) {
            ++sel.discarded_dependent;
            continue;
        }
        if ((int)basis.size() == dim) continue; // span is already everything
        // eliminate against the kept set
        for (size_t b = 0; b < basis.size(); ++b) {
            uint64_t f = w[basis_pivot[b]];
            if (f == 0) continue;
            const auto& bv = basis[b];
            for (int t = basis_pivot[b]; t < dim; ++t)
                if (bv[t]) w[t] = sub_mod(w[t], mul_mod(f, bv[t], p), p);
        }
        int pivot = -1;
        for (int t = 0; t < dim; ++t)
            if (w[t]) {
                pivot = t;
                break;
            }
        if (pivot < 0) continue;
        uint64_t inv = inv_mod(w[pivot], p);
        for (int t = pivot; t < dim; ++t)
            if (w[t]) w[t] = mul_mod(w[t], inv, p);
        basis.push_back(w);
        basis_pivot.push_back(pivot);
        sel.kept.push_back((int)fi);
    }
    return sel;
}

namespace {

long double binom_ld(int n, int k) {
    if (k < 0 || k > n) return 0;
    long double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TripleFamily representative_triples(const DirectedGraph& h, const VertexSet& s_h, int ell,
                                    const TripleFamily& family, uint64_t seed,
                                    uint64_t prime, RepTriplesStats* stats) {
    if (ell < 0) throw precondition_error("representative_triples: negative ell");
    for (const auto& t : family) {
        if (t.empty() || t.size() > 3)
            throw precondition_error("representative_triples: member size must be 1..3");
        for (int v : t)
            if (!h.live(v))
                throw precondition_error("representative_triples: member outside h");
    }

    auto inst = build_gammoid_digraph(h, s_h, ell);
    std::mt19937_64 rng(seed);
    int attempts = 1;
    auto a = gammoid_representation(inst.d, inst.sources, prime, rng, &attempts);

    std::vector<std::array<int, 3>> lifted;
    lifted.reserve(family.sets.size());
    for (const auto& t : family.sets) {
        auto cols = lift_columns(inst, t);
        std::sort(cols.begin(), cols.end());
        lifted.push_back(cols);
    }
    auto sel = representative_family(a, lifted, 3 * ell);

    TripleFamily out;
    for (int idx : sel.kept) out.sets.push_back(family.sets[idx]);
    out.canonicalize();

    if (stats) {
        int n_d = inst.d.vertex_count();
        long double closest_bound = 0;
        for (int i = 0; i <= ell; ++i)
            closest_bound += binom_ld((int)inst.h_vertices.size(), i);
        long double degree = (long double)family.size() * closest_bound * n_d +
                             (long double)attempts * n_d * n_d;
        stats->sz_degree = degree > 4e18L ? (long long)4e18 : (long long)degree;
        stats->error_bound = degree / (long double)prime;
        if (stats->error_bound > 1) stats->error_bound = 1;
        stats->discarded_dependent = sel.discarded_dependent;
        stats->attempts = attempts;
    }
    return out;
}

} // namespace vck
