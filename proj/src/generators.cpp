#include "vck/generators.hpp"

#include <random>

#include "vck/decomposition.hpp"
#include "vck/errors.hpp"
#include "vck/matching.hpp"

namespace vck {

UndirectedGraph odd_cycles(int t, int s) {
    if (t < 0 || s < 1) throw precondition_error("odd_cycles: need t >= 0 and s >= 1");
    int len = 2 * s + 1;
    UndirectedGraph g(t * len);
    for (int c = 0; c < t; ++c) {
        int base = c * len;
        for (int i = 0; i < len; ++i) g.add_edge(base + i, base + (i + 1) % len);
    }
    return g;
}

namespace {

// Uniform draw from [0, 1) with 53 random bits; avoids distribution classes
// whose output is not pinned down by the standard.
double unit_draw(std::mt19937_64& rng) {
    return (double)(rng() >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace

UndirectedGraph gnp(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw precondition_error("gnp: bad parameters");
    std::mt19937_64 rng(seed);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) g.add_edge(u, v);
    return g;
}

UndirectedGraph factor_critical_chords(int n, int extra, uint64_t seed) {
    if (n < 3 || n % 2 == 0) throw precondition_error("factor_critical_chords: need odd n >= 3");
    long long chord_room = (long long)n * (n - 1) / 2 - n;
    if (extra < 0 || extra > chord_room)
        throw precondition_error("factor_critical_chords: chord count out of range");
    std::mt19937_64 rng(seed);
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    int added = 0;
    while (added < extra) {
        int u = (int)(rng() % (uint64_t)n);
        int v = (int)(rng() % (uint64_t)n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

long long suggested_k(const UndirectedGraph& g, long long ell) {
    LpResult lp = lp_value(g);
    Matching mm = maximum_matching(g);
    return lp.cost_half_units - (long long)mm.size() + ell;
}

} // namespace vck
