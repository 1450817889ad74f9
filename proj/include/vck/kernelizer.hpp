#pragma once

#include <cstdint>
#include <vector>

#include "vck/decomposition.hpp"
#include "vck/graph.hpp"
#include "vck/repset.hpp"

namespace vck {

// ell = k - (2*LP(g) - MM(g)), the excess of the budget over the
// decomposition lower bound.
long long compute_ell(const UndirectedGraph& g, long long k);

struct RoundRecord {
    int family_size = 0;   // candidate sets T examined this round
    int repset_size = 0;   // sets kept by the representative family
    int selected = 0;      // components newly marked relevant
};

struct SelectionResult {
    bool definite_no = false; // more than ell components lack a tight cover
    std::vector<VertexSet> c_rel;
    std::vector<RoundRecord> rounds;
    long long sz_degree = 0;
    long double error_bound = 0;
};

// Marks the unmatched non-singleton components that any optimal cover near
// the lower bound could be forced to overpay on: first those with no tight
// cover at all, then ell+1 rounds of representative triples over A.
SelectionResult select_relevant(const UndirectedGraph& g, const NiceDecomposition& dec,
                                long long ell, uint64_t seed,
                                uint64_t prime = default_prime);

struct RemovalResult {
    UndirectedGraph graph;
    long long k = 0;
    NiceDecomposition dec;
};

// Deletes every unmatched non-singleton component outside c_rel and lowers k
// by the tight-cover cost (|C|+1)/2 of each; ell is unchanged.
RemovalResult remove_irrelevant(const UndirectedGraph& g, long long k,
                                const NiceDecomposition& dec,
                                const std::vector<VertexSet>& c_rel);

enum class Verdict { reduced, definite_yes, definite_no };

struct KernelOutput {
    Verdict verdict = Verdict::reduced;
    UndirectedGraph g_out;
    long long k_out = 0;
    long long ell_in = 0;  // excess after LP preprocessing
    long long ell_out = 0; // excess of the emitted instance
    long long p_out = 0;   // k_out - MM(g_out); 0 for definite verdicts
    std::vector<VertexSet> c_rel;
    std::vector<RoundRecord> rounds;
    VertexSet forced_in;   // vertices the LP preprocessing put into the cover
    VertexSet removed_out; // vertices it discarded
    long long sz_degree = 0;
    long double error_bound = 0; // randomized failure probability bound
    uint64_t seed = 0;
    uint64_t prime = default_prime;
};

// Full pipeline: LP preprocessing, decomposition, relevant-component
// selection, and deletion of everything else.  A failed random round can
// only delete a component that mattered, i.e. possibly turn a no-instance
// into a yes; yes-instances always stay yes.
KernelOutput kernelize(const UndirectedGraph& g, long long k, uint64_t seed,
                       uint64_t prime = default_prime);

const char* to_string(Verdict v);

} // namespace vck
