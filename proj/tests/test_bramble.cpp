#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "phylo/bramble.hpp"

using namespace phylo;

namespace {

LabeledGraph complete(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

LabeledGraph cycle(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("verify_bramble") {
    LabeledGraph p4;
    for (int i = 0; i < 4; ++i) p4.add_vertex();
    for (int i = 0; i < 3; ++i) p4.add_edge(i, i + 1);

    SUBCASE("valid: overlapping connected sets") {
        Bramble b{{{0, 1}, {1, 2}, {2, 3}}};
        CHECK(verify_bramble(p4, b).valid());
    }
    SUBCASE("disconnected element") {
        Bramble b{{{0, 2}}};
        auto rep = verify_bramble(p4, b);
        REQUIRE_FALSE(rep.valid());
        CHECK(rep.violations[0].property == "connected");
    }
    SUBCASE("non-touching pair") {
        Bramble b{{{0}, {3}}};
        auto rep = verify_bramble(p4, b);
        REQUIRE_FALSE(rep.valid());
        CHECK(rep.violations[0].property == "touch");
    }
    SUBCASE("adjacent singletons touch") {
        Bramble b{{{0}, {1}}};
        CHECK(verify_bramble(p4, b).valid());
    }
    SUBCASE("vertices absent from the host are dropped") {
        Bramble b{{{0, 1, 99}, {1, 2}}};
        CHECK(verify_bramble(p4, b).valid());
    }
}

TEST_CASE("minimum hitting sets") {
    SUBCASE("K4 singletons need all four vertices") {
        LabeledGraph k4 = complete(4);
        Bramble b{{{0}, {1}, {2}, {3}}};
        HittingSet h = min_hitting_set(k4, b);
        CHECK(h.size == 4);
        CHECK(tw_lower_bound(k4, b) == 3);
    }
    SUBCASE("one shared vertex suffices") {
        LabeledGraph k4 = complete(4);
        Bramble b{{{0, 1}, {0, 2}, {0, 3}}};
        HittingSet h = min_hitting_set(k4, b);
        CHECK(h.size == 1);
        CHECK(h.vertices == std::vector<VertexId>{0});
    }
    SUBCASE("cycle cross bramble has order 3") {
        LabeledGraph c4 = cycle(4);
        Bramble b{{{0}, {1, 2}, {3, 2}}};
        // every pair touches; hitting needs {0, 2}
        HittingSet h = min_hitting_set(c4, b);
        CHECK(h.size == 2);
        CHECK(tw_lower_bound(c4, b) == 1);
    }
    SUBCASE("invalid brambles are rejected") {
        LabeledGraph p4;
        for (int i = 0; i < 4; ++i) p4.add_vertex();
        for (int i = 0; i < 3; ++i) p4.add_edge(i, i + 1);
        Bramble b{{{0}, {3}}};  // ends of the path do not touch
        CHECK_THROWS_AS(min_hitting_set(p4, b), InvalidCertificate);
    }
    SUBCASE("element count cap") {
        LabeledGraph k4 = complete(4);
        Bramble b;
        for (int i = 0; i < 129; ++i) b.elements.push_back({0});
        CHECK_THROWS_AS(min_hitting_set(k4, b), InvalidParams);
    }
}

TEST_CASE("bramble io round-trip") {
    Bramble b{{{3, 1, 2}, {0}, {5, 7}}};
    Bramble back = read_bramble(write_bramble(b));
    REQUIRE(back.elements.size() == 3);
    CHECK(back.elements[1] == std::vector<VertexId>{0});
    CHECK(read_bramble("1 2\n\n3\n").elements.size() == 2);
}
