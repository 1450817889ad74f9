#include "doctest.h"

#include <random>

#include "vck/errors.hpp"
#include "vck/matching.hpp"

#include "helpers.hpp"

using namespace vck;
using namespace testutil;

TEST_CASE("matching bookkeeping") {
    Matching m(6);
    m.add(0, 3);
    m.add(1, 2);
    CHECK(m.size() == 2);
    CHECK(m.mate(0) == 3);
    CHECK(m.mate(3) == 0);
    CHECK(m.covers(1));
    CHECK(!m.covers(4));
    CHECK(m.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(m.covered_vertices() == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(m.add(0, 5), precondition_error); // 0 already matched
    CHECK_THROWS_AS(m.add(4, 4), precondition_error);
    m.remove(1, 2);
    CHECK(m.size() == 1);
    CHECK_THROWS_AS(m.remove(1, 2), precondition_error);

    Matching r = m.restricted_to(VertexSet{0, 3, 5});
    CHECK(r.size() == 1);
    Matching r2 = m.restricted_to(VertexSet{3});
    CHECK(r2.size() == 0);
}

TEST_CASE("matching validity against a graph") {
    UndirectedGraph g = path_graph(4);
    Matching m(4);
    m.add(0, 1);
    m.add(2, 3);
    CHECK(m.valid_for(g));
    Matching bad(4);
    bad.add(0, 2); // not an edge
    CHECK(!bad.valid_for(g));
}

TEST_CASE("maximum matching on fixed graphs") {
    CHECK(maximum_matching(path_graph(2)).size() == 1);
    CHECK(maximum_matching(path_graph(5)).size() == 2);
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(cycle_graph(6)).size() == 3);
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    CHECK(maximum_matching(complete_graph(5)).size() == 2);
    CHECK(maximum_matching(star_graph(4)).size() == 1);
    CHECK(maximum_matching(UndirectedGraph(3)).size() == 0);

    // two triangles
    UndirectedGraph tt(6);
    for (int b : {0, 3})
        for (int i = 0; i < 3; ++i) tt.add_edge(b + i, b + (i + 1) % 3);
    CHECK(maximum_matching(tt).size() == 2);
}

TEST_CASE("blossom handles odd structures") {
    // Two triangles joined by a bridge: perfect matching exists only by
    // using the bridge, which plain greedy augmenting without blossom
    // shrinking would miss.
    UndirectedGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    Matching m = maximum_matching(g);
    CHECK(m.size() == 3);
    CHECK(m.valid_for(g));
}

TEST_CASE("maximum matching matches the reference on random graphs") {
    std::mt19937_64 rng(1001);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + (int)(rng() % 10);
        UndirectedGraph g = rand_graph(rng, n, 0.35);
        Matching m = maximum_matching(g);
        CHECK(m.valid_for(g));
        CHECK(m.size() == ref_max_matching(g));
    }
}

TEST_CASE("augmenting preserves covered vertices") {
    std::mt19937_64 rng(1002);
    for (int it = 0; it < 150; ++it) {
        int n = 4 + (int)(rng() % 9);
        UndirectedGraph g = rand_graph(rng, n, 0.3);
        // start from a partial greedy matching over a random edge order
        std::vector<std::pair<int, int>> edges;
        for (int u : g.vertices())
            for (int v : g.neighbors(u))
                if (u < v) edges.emplace_back(u, v);
        std::shuffle(edges.begin(), edges.end(), rng);
        Matching m0(g.id_bound());
        for (auto [u, v] : edges)
            if (!m0.covers(u) && !m0.covers(v) && m0.size() < (int)(rng() % 4)) m0.add(u, v);

        Matching m = augment_to_maximum(g, m0);
        CHECK(m.valid_for(g));
        CHECK(m.size() == ref_max_matching(g));
        VertexSet before = m0.covered_vertices();
        for (int v : before.ids()) CHECK(m.covers(v));
    }

    UndirectedGraph g = path_graph(3);
    Matching wrong(2); // too small a table
    CHECK_THROWS_AS(augment_to_maximum(g, wrong), precondition_error);
    Matching nonedge(3);
    nonedge.add(0, 2);
    CHECK_THROWS_AS(augment_to_maximum(g, nonedge), precondition_error);
}

TEST_CASE("hopcroft-karp with konig cover on random bipartite graphs") {
    std::mt19937_64 rng(1003);
    for (int it = 0; it < 200; ++it) {
        int nl = 1 + (int)(rng() % 6), nr = 1 + (int)(rng() % 6);
        BipartiteGraph b;
        b.n_left = nl;
        b.n_right = nr;
        b.adj.assign(nl, {});
        UndirectedGraph mirror(nl + nr);
        for (int u = 0; u < nl; ++u)
            for (int v = 0; v < nr; ++v)
                if (rng() % 3 == 0) {
                    b.adj[u].push_back(v);
                    mirror.add_edge(u, nl + v);
                }
        BipartiteMatching m = hopcroft_karp(b);
        CHECK(m.size == ref_max_matching(mirror));
        for (int u = 0; u < nl; ++u)
            if (m.left_mate[u] != -1) CHECK(m.right_mate[m.left_mate[u]] == u);

        BipartiteCover c = konig_cover(b, m);
        int csize = 0;
        for (char f : c.left) csize += f;
        for (char f : c.right) csize += f;
        CHECK(csize == m.size); // Konig equality
        for (int u = 0; u < nl; ++u)
            for (int v : b.adj[u]) CHECK((c.left[u] || c.right[v]));
    }
}

TEST_CASE("hall matcher saturates or names a violating set") {
    // stars sharing no leaves: singletons can all be matched
    UndirectedGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(4, 1);
    g.add_edge(4, 5);
    HallResult ok = hall_match_singletons(g, VertexSet{0, 2, 4});
    CHECK(ok.saturated);
    CHECK(ok.matching.size() == 3);
    for (int v : {0, 2, 4}) CHECK(ok.matching.covers(v));

    // path 0-1-2: both ends compete for the middle
    UndirectedGraph p = path_graph(3);
    HallResult bad = hall_match_singletons(p, VertexSet{0, 2});
    CHECK(!bad.saturated);
    CHECK(bad.violating == VertexSet{0, 2});
    CHECK((int)open_neighborhood(p, bad.violating).size() < (int)bad.violating.size());

    // non-independent input is rejected
    CHECK_THROWS_AS(hall_match_singletons(p, VertexSet{0, 1}), precondition_error);
}

TEST_CASE("hall violating set is a genuine certificate on random graphs") {
    std::mt19937_64 rng(1004);
    int violations = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 4 + (int)(rng() % 8);
        UndirectedGraph g = rand_graph(rng, n, 0.25);
        // grow a random independent set
        std::vector<int> order = g.vertices();
        std::shuffle(order.begin(), order.end(), rng);
        VertexSet singles;
        for (int v : order) {
            bool clash = false;
            for (int u : g.neighbors(v))
                if (singles.contains(u)) clash = true;
            if (!clash && rng() % 2 == 0) singles.insert(v);
        }
        HallResult res = hall_match_singletons(g, singles);
        if (res.saturated) {
            CHECK(res.matching.size() == singles.size());
            for (int v : singles.ids()) CHECK(res.matching.covers(v));
            CHECK(res.matching.valid_for(g));
        } else {
            ++violations;
            CHECK(res.violating.is_subset_of(singles));
            CHECK(!res.violating.empty());
            CHECK((int)open_neighborhood(g, res.violating).size() <
                  (int)res.violating.size());
        }
    }
    CHECK(violations > 0); // the corpus must exercise both branches
}
