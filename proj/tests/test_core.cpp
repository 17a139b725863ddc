#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/core.hpp"
#include "phylo/io.hpp"
#include "phylo/random_gen.hpp"

using namespace phylo;

TEST_CASE("make_phylo_tree validates") {
    CHECK_NOTHROW(parse_newick("((a,b),(c,d));"));

    LabeledGraph bad;  // internal vertex of degree 2
    for (int i = 0; i < 3; ++i) bad.add_vertex();
    bad.add_edge(0, 1);
    bad.add_edge(1, 2);
    bad.set_label(0, "a");
    bad.set_label(2, "b");
    CHECK_THROWS_AS(make_phylo_tree(std::move(bad)), DegreeViolation);

    LabeledGraph cyc;
    for (int i = 0; i < 3; ++i) cyc.add_vertex();
    cyc.add_edge(0, 1);
    cyc.add_edge(1, 2);
    cyc.add_edge(0, 2);
    CHECK_THROWS_AS(make_phylo_tree(std::move(cyc)), Error);
}

TEST_CASE("make_phylo_network validates") {
    // smallest network: triangle with pendant leaves is not binary; use the
    // standard 1-reticulation network on 3 taxa
    PhyloTree t = parse_newick("((a,b),c);");  // 3 taxa: a path of cherries
    PhyloNetwork n0 = as_network(t);
    CHECK(reticulation_number(n0) == 0);
    CHECK(level(n0) == 0);

    std::mt19937 rng(7);
    PhyloNetwork n = random_network(5, 2, rng);
    CHECK(reticulation_number(n) == 2);
    CHECK(n.graph.is_simple());
    CHECK(n.graph.is_connected());

    LabeledGraph dis;
    dis.add_vertex();
    dis.add_vertex();
    CHECK_THROWS_AS(make_phylo_network(std::move(dis)), Error);
}

TEST_CASE("display graph of a quartet pair") {
    PhyloTree t1 = parse_newick("((a,b),(c,d));");
    PhyloTree t2 = parse_newick("((a,c),(b,d));");
    DisplayGraph d = build_display_graph(t1, t2);
    // 6 + 6 vertices, 4 leaf pairs identified
    CHECK(d.graph.num_vertices() == 8);
    CHECK(d.graph.num_edges() == 10);
    for (const auto& [v, name] : d.graph.labels()) {
        CHECK(d.graph.degree(v) == 2);
        CHECK(d.side.at(v) == Side::Shared);
    }
    // the identified leaf is reachable from both originals
    VertexId a1 = *t1.graph.vertex_with_label("a");
    VertexId a2 = *t2.graph.vertex_with_label("a");
    CHECK(d.first_to_display.at(a1) == d.second_to_display.at(a2));
}

TEST_CASE("display graph of equal quartet trees suppresses to a 4-vertex multigraph") {
    PhyloTree t = parse_newick("((a,b),(c,d));");
    DisplayGraph d = build_display_graph(t, t);
    LabeledGraph s = suppress(d.graph);
    CHECK(s.num_vertices() == 4);
    CHECK(s.num_edges() == 6);
    int parallel_pairs = 0;
    for (const Edge& e : s.edges())
        if (s.edge_multiplicity(e.first, e.second) == 2) ++parallel_pairs;
    CHECK(parallel_pairs == 4);  // two doubled pairs, each counted per edge copy
    for (VertexId v : s.vertices()) CHECK(s.degree(v) == 3);
}

TEST_CASE("common cherry shows up as a parallel edge after suppression") {
    PhyloTree t1 = parse_newick("((a,b),(c,(d,e)));");
    PhyloTree t2 = parse_newick("(((a,b),c),(d,e));");  // shares cherry {a,b}
    LabeledGraph s = suppress(build_display_graph(t1, t2).graph);
    bool found = false;
    for (const Edge& e : s.edges())
        if (s.edge_multiplicity(e.first, e.second) >= 2) found = true;
    CHECK(found);
}

TEST_CASE("no-common-cherry pairs give simple cubic display graphs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        auto [t1, t2] = random_tree_pair_no_common_cherry(6, rng);
        LabeledGraph s = suppress(build_display_graph(t1, t2).graph);
        CHECK(s.is_simple());
        CHECK(s.is_connected());
        for (VertexId v : s.vertices()) CHECK(s.degree(v) == 3);
    }
}

TEST_CASE("taxon set mismatch is rejected") {
    PhyloTree t1 = parse_newick("((a,b),(c,d));");
    PhyloTree t2 = parse_newick("((a,b),(c,e));");
    CHECK_THROWS_AS(build_display_graph(t1, t2), TaxonMismatch);
}

TEST_CASE("level is the max over biconnected components") {
    // two level-1 blobs joined by cut edges: overall level 1, reticulations 2
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        PhyloNetwork n = random_network(6, 3, rng);
        CHECK(level(n) <= reticulation_number(n));
        CHECK(level(n) >= 1);
    }
}
