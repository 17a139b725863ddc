#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/display.hpp"
#include "phylo/io.hpp"
#include "phylo/random_gen.hpp"

using namespace phylo;

namespace {

// level-1 network on {a,b,c,d}: a 4-cycle with the four taxa pendant on it
PhyloNetwork four_cycle_network() {
    LabeledGraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex();
    for (int i = 0; i < 4; ++i) {
        g.add_edge(i, (i + 1) % 4);
        g.add_edge(i, 4 + i);
    }
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) g.set_label(4 + i, names[i]);
    return make_phylo_network(std::move(g));
}

EmbeddingCertificate identity_certificate(const PhyloTree& t) {
    EmbeddingCertificate cert;
    cert.image_edges = t.graph.edges();
    for (VertexId v : t.graph.vertices()) cert.vertex_map[v] = v;
    return cert;
}

}  // namespace

TEST_CASE("quartet canonicalization") {
    Quartet q = Quartet::make("d", "c", "b", "a");
    CHECK(q.str() == "a b | c d");
    CHECK(Quartet::make("a", "b", "c", "d") == Quartet::make("b", "a", "d", "c"));
    CHECK(Quartet::make("a", "b", "c", "d") != Quartet::make("a", "c", "b", "d"));
}

TEST_CASE("quartet sets") {
    PhyloTree t = parse_newick("((a,b),(c,d));");
    auto qs = quartet_set(t);
    REQUIRE(qs.size() == 1);
    CHECK(qs.begin()->str() == "a b | c d");

    PhyloTree cat = parse_newick("((a,b),(c,(d,e)));");
    auto q5 = quartet_set(cat);
    CHECK(q5.size() == 5);  // C(5,4)
    CHECK(q5.count(Quartet::make("a", "b", "c", "d")) == 1);
    CHECK(q5.count(Quartet::make("c", "d", "a", "e")) == 0);  // cd|ae not induced
    CHECK(q5.count(Quartet::make("a", "b", "d", "e")) == 1);

    CHECK_THROWS_AS(quartet_set(parse_newick("((a,b),c);")), TooFewTaxa);
}

TEST_CASE("restrict_and_suppress") {
    PhyloTree t = parse_newick("((a,b),(c,(d,e)));");
    SUBCASE("identity when keeping all taxa") {
        PhyloTree r = restrict_and_suppress(t.graph, t.taxa);
        CHECK(labeled_tree_isomorphic(r, t));
    }
    SUBCASE("dropping taxa prunes and suppresses") {
        PhyloTree r = restrict_and_suppress(t.graph, {"a", "c", "d"});
        CHECK(r.taxa == std::vector<std::string>{"a", "c", "d"});
        CHECK(r.graph.num_vertices() == 4);
        CHECK(labeled_tree_isomorphic(r, parse_newick("((a,c),d);")));
    }
    SUBCASE("tracked version exposes the steiner tree") {
        SteinerRestriction sr = restrict_tracked(t.graph, {"a", "d", "e"});
        CHECK(sr.steiner.num_vertices() >= sr.suppressed.graph.num_vertices());
        for (VertexId v : sr.suppressed.graph.vertices()) CHECK(sr.steiner.has_vertex(v));
    }
    CHECK_THROWS_AS(restrict_and_suppress(t.graph, {"a", "z"}), TaxonMissing);
}

TEST_CASE("labeled tree isomorphism") {
    PhyloTree t1 = parse_newick("((a,b),(c,d));");
    PhyloTree t2 = parse_newick("((c,d),(b,a));");
    PhyloTree t3 = parse_newick("((a,c),(b,d));");
    CHECK(labeled_tree_isomorphic(t1, t2));
    CHECK_FALSE(labeled_tree_isomorphic(t1, t3));

    auto iso = labeled_tree_isomorphism(t1, t2);
    REQUIRE(iso.has_value());
    for (const auto& [u, v] : *iso) {
        auto lu = t1.graph.label(u);
        auto lv = t2.graph.label(v);
        CHECK(lu.has_value() == lv.has_value());
        if (lu) CHECK(*lu == *lv);
    }
}

TEST_CASE("verify_embedding accepts the identity and rejects corruption") {
    PhyloTree t = parse_newick("((a,b),(c,d));");
    PhyloNetwork n = as_network(t);
    EmbeddingCertificate cert = identity_certificate(t);
    CHECK(verify_embedding(n, t, cert).valid());

    SUBCASE("taxon remapped breaks condition 1") {
        EmbeddingCertificate bad = cert;
        VertexId a = *t.graph.vertex_with_label("a");
        VertexId b = *t.graph.vertex_with_label("b");
        bad.vertex_map[a] = b;
        CHECK_FALSE(verify_embedding(n, t, bad).valid());
    }
    SUBCASE("missing image edge breaks condition 3") {
        EmbeddingCertificate bad = cert;
        bad.image_edges.pop_back();
        CHECK_FALSE(verify_embedding(n, t, bad).valid());
    }
}

TEST_CASE("certificate io round-trip") {
    PhyloTree t = parse_newick("((a,b),(c,d));");
    EmbeddingCertificate cert = identity_certificate(t);
    EmbeddingCertificate back = read_certificate(write_certificate(cert));
    CHECK(back.image_edges == cert.image_edges);
    CHECK(back.vertex_map == cert.vertex_map);
}

TEST_CASE("four-cycle network displays exactly two of the three quartets") {
    PhyloNetwork n = four_cycle_network();
    PhyloTree ab_cd = parse_newick("((a,b),(c,d));");
    PhyloTree ad_bc = parse_newick("((a,d),(b,c));");
    PhyloTree ac_bd = parse_newick("((a,c),(b,d));");
    // cycle order is a,b,c,d: removing one cycle edge keeps the two quartets
    // that pair up neighbors; the "diagonal" quartet is not displayed
    auto c1 = find_display(n, ab_cd);
    REQUIRE(c1.has_value());
    CHECK(verify_embedding(n, ab_cd, *c1).valid());
    CHECK(find_display(n, ad_bc).has_value());
    CHECK_FALSE(find_display(n, ac_bd).has_value());

    CHECK(displays_via_quartets(n, ab_cd));
    CHECK_FALSE(displays_via_quartets(n, ac_bd));
}

TEST_CASE("a tree displays exactly itself") {
    std::mt19937 rng(53);
    PhyloTree t = random_tree(7, rng);
    PhyloNetwork n = as_network(t);
    auto cert = find_display(n, t);
    REQUIRE(cert.has_value());
    CHECK(verify_embedding(n, t, *cert).valid());
    PhyloTree other = random_tree(7, rng);
    if (!labeled_tree_isomorphic(t, other)) CHECK_FALSE(find_display(n, other).has_value());
}

TEST_CASE("search oracle agrees with the quartet oracle") {
    std::mt19937 rng(59);
    for (int i = 0; i < 30; ++i) {
        PhyloNetwork n = random_network(6, 2, rng);
        PhyloTree t = (i % 2 == 0) ? random_displayed_tree(n, rng) : random_tree(6, rng);
        auto cert = find_display(n, t);
        bool oracle = displays_via_quartets(n, t);
        CHECK(cert.has_value() == oracle);
        if (cert) CHECK(verify_embedding(n, t, *cert).valid());
    }
}

TEST_CASE("search limits raise LimitExceeded") {
    std::mt19937 rng(61);
    PhyloNetwork n = random_network(8, 6, rng);
    PhyloTree t = random_tree(8, rng);
    SearchLimits limits;
    limits.max_nodes = 1;
    CHECK_THROWS_AS(find_display(n, t, limits), LimitExceeded);
}
