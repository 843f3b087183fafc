#include <doctest.h>

#include <random>
#include <set>

#include "symedge/chordal.hpp"
#include "symedge/cliques.hpp"
#include "symedge/enumerate.hpp"
#include "symedge/errors.hpp"
#include "symedge/graph6.hpp"
#include "symedge/graph_classes.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace symedge;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("complement basics") {
    Graph empty3(3);
    CHECK(complement(empty3) == fixtures::complete(3));
    CHECK(complement(fixtures::complete(3)) == empty3);

    Graph p3 = fixtures::path(3);
    Graph p3c = complement(p3);
    CHECK(p3c.edge_count() == 1);
    CHECK(p3c.has_edge(1, 3));

    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = random_graph(6, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("graph invariants: symmetry and no loops") {
    Graph g = fixtures::wheel_like_7();
    for (int i = 1; i <= 7; ++i) {
        CHECK_FALSE(g.has_edge(i, i));
        for (int j = 1; j <= 7; ++j)
            if (i != j) CHECK(g.has_edge(i, j) == g.has_edge(j, i));
    }
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(fixtures::complete(4), VertexSet::first_n(3)).graph ==
          fixtures::complete(3));

    auto sub = induced_subgraph(fixtures::cycle(5), VertexSet::first_n(3));
    CHECK(sub.graph == fixtures::path(3));
    CHECK(sub.to_parent == std::vector<int>{1, 2, 3});

    // the triangle {x2,x3,x7} of the 7-vertex fixture
    VertexSet a;
    a.add(2).add(3).add(7);
    CHECK(induced_subgraph(fixtures::wheel_like_7(), a).graph == fixtures::complete(3));

    CHECK_THROWS_AS(induced_subgraph(fixtures::path(3), VertexSet{}), std::invalid_argument);
}

TEST_CASE("join") {
    CHECK(join(Graph(1), Graph(1)) == fixtures::complete(2));
    CHECK(join(fixtures::complete(2), Graph(1)) == fixtures::complete(3));

    std::mt19937 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g1 = random_graph(4, rng);
        Graph g2 = random_graph(3, rng);
        // complement of a join is the disjoint union of the complements
        Graph joined_c = complement(join(g1, g2));
        Graph expected(7);
        for (auto [i, j] : complement(g1).edges()) expected.add_edge(i, j);
        for (auto [i, j] : complement(g2).edges()) expected.add_edge(i + 4, j + 4);
        CHECK(joined_c == expected);
        // cliques of a join are unions of cliques of the parts
        CHECK(clique_number(join(g1, g2)) == clique_number(g1) + clique_number(g2));
    }
}

TEST_CASE("chordality via MCS agrees with induced-cycle search") {
    CHECK_FALSE(is_chordal(fixtures::cycle(4)));
    CHECK(is_chordal(fixtures::path(7)));
    CHECK(is_chordal(fixtures::complete(5)));
    // C5 is self-complementary, so its complement is again not chordal
    CHECK(is_chordal(complement(fixtures::cycle(5))) ==
          oracles::chordal(complement(fixtures::cycle(5))));

    for (int n = 2; n <= 6; ++n)
        enumerate_graphs(n, false, [&](const Graph& g) {
            const bool fast = is_chordal(g);
            CHECK(fast == oracles::chordal(g));
            if (fast) CHECK(verify_peo(g, mcs_order(g)));
        });
}

TEST_CASE("cochordal examples") {
    CHECK(is_cochordal(fixtures::complete(6)));
    CHECK(is_cochordal(fixtures::cycle(4)));   // complement is 2K2
    CHECK_FALSE(is_cochordal(fixtures::cycle(5)));
}

TEST_CASE("maximal cliques match subset brute force") {
    CHECK(clique_number(fixtures::complete(4)) == 4);
    CHECK(cliques_of_size(fixtures::complete(4), 2).size() == 6);
    CHECK(clique_number(fixtures::wheel_like_7()) == 3);
    CHECK(maximal_cliques(fixtures::cycle(5)).size() == 5);

    // exhaustive against the subset oracle up to 5 vertices, sampled at 6
    for (int n = 1; n <= 5; ++n)
        enumerate_graphs(n, false, [&](const Graph& g) {
            CHECK(maximal_cliques(g) == oracles::maximal_cliques(g));
        });
    std::mt19937 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = random_graph(6, rng);
        CHECK(maximal_cliques(g) == oracles::maximal_cliques(g));
    }

    // independent sets are cliques of the complement
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(6, rng);
        CHECK(maximal_independent_sets(g) == maximal_cliques(complement(g)));
    }
}

TEST_CASE("independent sets and vertex covers") {
    auto covers_k3 = minimal_vertex_covers(fixtures::complete(3));
    CHECK(covers_k3.size() == 3);
    for (VertexSet c : covers_k3) CHECK(c.size() == 2);

    auto covers_p3 = minimal_vertex_covers(fixtures::path(3));
    REQUIRE(covers_p3.size() == 2);
    CHECK(covers_p3[0] == VertexSet::single(2));
    CHECK((covers_p3[1] == VertexSet::single(1).with(3)));

    auto covers_c5 = minimal_vertex_covers(fixtures::cycle(5));
    CHECK(covers_c5 == oracles::minimal_vertex_covers(fixtures::cycle(5)));
    CHECK(covers_c5.size() == 5);
    for (VertexSet c : covers_c5) CHECK(c.size() == 3);

    std::mt19937 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_graph(6, rng);
        auto covers = minimal_vertex_covers(g);
        CHECK(covers == oracles::minimal_vertex_covers(g));
        auto sets = maximal_independent_sets(g);
        REQUIRE(covers.size() == sets.size());
        for (VertexSet a : sets) CHECK(g.is_independent(a));
    }
}

TEST_CASE("perfect graphs") {
    CHECK_FALSE(is_perfect(fixtures::cycle(5)));
    CHECK(is_perfect(fixtures::wheel_like_7()));
    CHECK(is_perfect(fixtures::cycle(6)));
    CHECK_THROWS_AS(is_perfect(Graph(13)), resource_limit_error);

    // every chordal graph is perfect
    for (int n = 4; n <= 6; ++n)
        enumerate_graphs(n, true, [&](const Graph& g) {
            if (is_chordal(g)) CHECK(is_perfect(g));
        });

    // chordal graphs on 7 and 8 vertices, grown vertex by vertex with each
    // new vertex attached to a clique
    std::mt19937 rng(29);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 7 + static_cast<int>(rng() % 2);
        Graph g(n);
        for (int v = 2; v <= n; ++v) {
            // pick a clique inside the current graph: a random vertex's
            // closed neighbourhood intersected down to a clique greedily
            VertexSet base;
            const int anchor = 1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1));
            base.add(anchor);
            for (int u = 1; u < v; ++u)
                if (u != anchor && base.subset_of(g.neighbors(u)) && rng() % 2 == 0)
                    base.add(u);
            for (int u : base) g.add_edge(u, v);
        }
        REQUIRE(is_chordal(g));
        CHECK(is_perfect(g));
    }
}

TEST_CASE("block graphs") {
    CHECK(is_block_graph(fixtures::path(8)));
    CHECK(is_block_graph(fixtures::complete(4)));
    CHECK_FALSE(is_block_graph(fixtures::cycle(4)));
    CHECK(is_block_graph(fixtures::block_figure_25()));
    // diamond: two triangles sharing an edge
    CHECK_FALSE(is_block_graph(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})));

    // all trees up to 8 vertices are block graphs: grow random trees
    std::mt19937 rng(19);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Graph t(n);
        for (int v = 2; v <= n; ++v)
            t.add_edge(1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)), v);
        CHECK(is_block_graph(t));
    }
}

TEST_CASE("proper interval recognition") {
    auto path_order = is_proper_interval(fixtures::path(5));
    REQUIRE(path_order.has_value());
    CHECK(verify_proper_interval_order(fixtures::path(5), *path_order));

    CHECK(is_proper_interval(fixtures::complete(5)).has_value());

    CHECK_FALSE(is_proper_interval(fixtures::claw()).has_value());
    CHECK_FALSE(oracles::proper_interval_order_exists(fixtures::claw()));

    for (int n = 2; n <= 5; ++n)
        enumerate_graphs(n, true, [&](const Graph& g) {
            auto order = is_proper_interval(g);
            CHECK(order.has_value() == oracles::proper_interval_order_exists(g));
            if (order) CHECK(verify_proper_interval_order(g, *order));
        });
}

TEST_CASE("condition (c)") {
    CHECK(satisfies_condition_c(fixtures::complete(5)));
    CHECK(satisfies_condition_c(fixtures::cycle(4)));

    const Graph h = fixtures::condition_c_figure_9();
    CHECK(is_chordal(h));
    CHECK(satisfies_condition_c(complement(h)));
    CHECK_FALSE(is_block_graph(h));
    CHECK_FALSE(is_proper_interval(h).has_value());
}

TEST_CASE("graph enumeration") {
    int labeled = 0;
    enumerate_graphs(3, false, [&](const Graph&) { ++labeled; });
    CHECK(labeled == 8);

    int classes = 0;
    enumerate_graphs(3, true, [&](const Graph&) { ++classes; });
    CHECK(classes == 4);

    int classes4 = 0;
    enumerate_graphs(4, true, [&](const Graph&) { ++classes4; });
    CHECK(classes4 == 11);

    CHECK_THROWS_AS(enumerate_graphs(8, false, [](const Graph&) {}), resource_limit_error);
}

TEST_CASE("isomorphism helper") {
    CHECK(isomorphic(fixtures::path(4), Graph::from_edges(4, {{2, 4}, {1, 3}, {3, 4}})));
    CHECK_FALSE(isomorphic(fixtures::path(4), fixtures::claw()));

    int classes5 = 0;
    std::vector<Graph> reps;
    enumerate_graphs(5, false, [&](const Graph& g) {
        for (const Graph& r : reps)
            if (isomorphic(g, r)) return;
        reps.push_back(g);
        ++classes5;
    });
    CHECK(classes5 == 34);
}

TEST_CASE("graph6 round trips and errors") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 12), rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }

    // header handling
    Graph k3 = fixtures::complete(3);
    CHECK(parse_graph6(std::string(">>graph6<<") + emit_graph6(k3)) == k3);
    CHECK(parse_graph6(emit_graph6(k3) + "\n") == k3);

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("D"), parse_error);       // truncated bits
    CHECK_THROWS_AS(parse_graph6("B\x1f"), parse_error);   // byte below 63
    bool threw = false;
    try {
        parse_graph6("Bw junk");
    } catch (const parse_error& e) {
        threw = true;
        CHECK(e.offset() == 3);
    }
    CHECK(threw);

    // long-form round trips at the 64-vertex ceiling
    for (int n : {63, 64}) {
        Graph big(n);
        big.add_edge(1, n);
        big.add_edge(2, 3);
        CHECK(parse_graph6(emit_graph6(big)) == big);
    }
    CHECK_THROWS_AS(Graph(65), resource_limit_error);

    // the worked example from the format's documentation: 5 vertices with
    // edges 0-2, 0-4, 1-3, 3-4 encode as "DQc"
    Graph doc5 = Graph::from_edges(5, {{1, 3}, {1, 5}, {2, 4}, {4, 5}});
    CHECK(emit_graph6(doc5) == "DQc");
    CHECK(parse_graph6("DQc") == doc5);
}

TEST_CASE("edge list format") {
    Graph g = fixtures::wheel_like_7();
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3\n2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("oops"), parse_error);
}
