#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/io.hpp"
#include "phylo/random_gen.hpp"
#include "phylo/transforms.hpp"

using namespace phylo;

TEST_CASE("transforms on a plain tree") {
    PhyloTree t = parse_newick("((a,b),(c,(d,e)));");
    PhyloNetwork n = as_network(t);
    auto cert = find_display(n, t);
    REQUIRE(cert.has_value());
    ExactResult td_n = exact_treewidth(n.graph);
    CHECK(td_n.width == 1);

    DisplayGraph d = build_display_graph(n, t);

    TreeDecomposition doubled = doubling_transform(n, t, td_n.td, *cert);
    auto rep = validate_decomposition(d.graph, doubled);
    CHECK(rep.valid());
    CHECK(rep.width <= 2 * td_n.width + 1);

    TreeDecomposition leveled = level_transform(n, t, *cert);
    auto rep2 = validate_decomposition(d.graph, leveled);
    CHECK(rep2.valid());
    CHECK(rep2.width <= level(n) + 2);

    BoundBundle b = bound_bundle(n, t, *cert, td_n.td);
    CHECK(b.two_tw_plus_1 == 3);
    CHECK(b.retic_plus_2 == 2);
    CHECK(b.level_plus_2 == 2);
    CHECK(b.min == 2);
    CHECK(exact_treewidth(d.graph).width <= b.min);
}

TEST_CASE("bounds hold on random network/tree pairs") {
    std::mt19937 rng(67);
    for (int i = 0; i < 12; ++i) {
        PhyloNetwork n = random_network(6, 1 + i % 3, rng);
        PhyloTree t = random_displayed_tree(n, rng);
        auto cert = find_display(n, t);
        REQUIRE(cert.has_value());
        ExactResult td_n = exact_treewidth(n.graph);
        BoundBundle b = bound_bundle(n, t, *cert, td_n.td);

        CHECK(b.two_tw_plus_1 == 2 * td_n.width + 1);
        CHECK(b.retic_plus_2 == reticulation_number(n) + 2);
        CHECK(b.level_plus_2 == level(n) + 2);
        CHECK(b.min == std::min({b.two_tw_plus_1, b.retic_plus_2, b.level_plus_2}));

        int tw_d = exact_treewidth(build_display_graph(n, t).graph).width;
        CHECK(tw_d <= b.min);
    }
}

TEST_CASE("doubling transform rejects a broken certificate") {
    PhyloTree t = parse_newick("((a,b),(c,d));");
    PhyloNetwork n = as_network(t);
    ExactResult td_n = exact_treewidth(n.graph);
    EmbeddingCertificate bogus;  // empty: fixes no taxon
    CHECK_THROWS_AS(doubling_transform(n, t, td_n.td, bogus), InvalidCertificate);
    CHECK_THROWS_AS(level_transform(n, t, bogus), InvalidCertificate);
}

TEST_CASE("level transform beats doubling on low-level, high-treewidth-free shapes") {
    // chain of independent cycles: level 1, so level bound is 3 regardless of r
    std::mt19937 rng(71);
    for (int i = 0; i < 5; ++i) {
        PhyloNetwork n = random_network(7, 4, rng);
        if (level(n) != 1) continue;
        PhyloTree t = random_displayed_tree(n, rng);
        auto cert = find_display(n, t);
        REQUIRE(cert.has_value());
        TreeDecomposition td = level_transform(n, t, *cert);
        DisplayGraph d = build_display_graph(n, t);
        auto rep = validate_decomposition(d.graph, td);
        CHECK(rep.valid());
        CHECK(rep.width <= 3);
    }
}
