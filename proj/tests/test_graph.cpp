#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/graph.hpp"

using namespace phylo;

namespace {

LabeledGraph path(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

LabeledGraph cycle(int n) {
    LabeledGraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

}  // namespace

TEST_CASE("basic mutation and queries") {
    LabeledGraph g;
    VertexId a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);  // parallel
    CHECK(g.degree(a) == 2);
    CHECK(g.edge_multiplicity(a, b) == 2);
    CHECK_FALSE(g.is_simple());
    g.remove_edge(a, b);
    CHECK(g.is_simple());
    CHECK_THROWS_AS(g.add_edge(a, a), Error);

    g.set_label(a, "x");
    CHECK(*g.label(a) == "x");
    CHECK(*g.vertex_with_label("x") == a);
    CHECK_THROWS_AS(g.set_label(b, "x"), DuplicateTaxon);
    g.remove_vertex(a);
    CHECK_FALSE(g.vertex_with_label("x").has_value());
}

TEST_CASE("explicit ids coexist with generated ones") {
    LabeledGraph g;
    g.add_vertex(5);
    VertexId v = g.add_vertex();
    CHECK(v != 5);
    CHECK(g.has_vertex(5));
}

TEST_CASE("suppress collapses degree-2 paths") {
    LabeledGraph g = path(4);
    LabeledGraph s = suppress(g);
    CHECK(s.num_vertices() == 2);
    CHECK(s.num_edges() == 1);
    CHECK(s.has_edge(0, 3));
}

TEST_CASE("suppress is idempotent and keeps parallel edges") {
    LabeledGraph g = cycle(4);
    VertexId v = g.add_vertex();
    g.add_edge(0, v);
    g.add_edge(2, v);  // theta graph once suppressed
    LabeledGraph s = suppress(g);
    CHECK(suppress(s) == s);
    CHECK(s.num_vertices() == 2);
    CHECK(s.num_edges() == 3);
    CHECK(s.edge_multiplicity(0, 2) == 3);
}

TEST_CASE("suppress leaves two-vertex multigraph alone") {
    LabeledGraph g;
    g.add_vertex();
    g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK(suppress(g) == g);
}

TEST_CASE("biconnected components") {
    SUBCASE("tree: every edge its own component") {
        auto comps = biconnected_components(path(5));
        CHECK(comps.size() == 4);
        for (const auto& c : comps) CHECK(c.size() == 1);
    }
    SUBCASE("cycle: one component") {
        auto comps = biconnected_components(cycle(5));
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == 5);
    }
    SUBCASE("two triangles sharing a vertex") {
        LabeledGraph g;
        for (int i = 0; i < 5; ++i) g.add_vertex();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(2, 4);
        auto comps = biconnected_components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].size() == 3);
        CHECK(comps[1].size() == 3);
    }
    SUBCASE("disconnected input rejected") {
        LabeledGraph g;
        g.add_vertex();
        g.add_vertex();
        CHECK_THROWS_AS(biconnected_components(g), Disconnected);
    }
}

TEST_CASE("isomorphism and canonical forms") {
    LabeledGraph c6 = cycle(6);
    LabeledGraph two_triangles;
    for (int i = 0; i < 6; ++i) two_triangles.add_vertex();
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    CHECK_FALSE(graphs_isomorphic(c6, two_triangles));

    // same cycle with shuffled ids
    LabeledGraph shuffled;
    for (int i = 0; i < 6; ++i) shuffled.add_vertex(10 * i + 3);
    int order[] = {3, 33, 13, 53, 23, 43};
    for (int i = 0; i < 6; ++i) shuffled.add_edge(order[i], order[(i + 1) % 6]);
    CHECK(graphs_isomorphic(c6, shuffled));
    CHECK(canonical_form(c6) == canonical_form(shuffled));
    CHECK(canonical_form(c6) != canonical_form(two_triangles));
}
