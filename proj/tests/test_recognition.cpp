#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/core.hpp"
#include "phylo/random_gen.hpp"
#include "phylo/recognition.hpp"

using namespace phylo;

namespace {

LabeledGraph k4() {
    LabeledGraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
}

LabeledGraph petersen() {
    LabeledGraph g;
    for (int i = 0; i < 10; ++i) g.add_vertex();
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

LabeledGraph k33() {
    LabeledGraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) g.add_edge(i, j);
    return g;
}

// exhaustive check over all 2^n bipartitions
bool brute_force_two_trees(const LabeledGraph& g) {
    auto vs = g.vertices();
    int n = (int)vs.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> a, b;
        for (int i = 0; i < n; ++i) (mask >> i & 1 ? a : b).push_back(vs[i]);
        auto induces_tree = [&](const std::vector<VertexId>& side) {
            if (side.empty()) return false;
            LabeledGraph sub;
            for (VertexId v : side) sub.add_vertex(v);
            for (VertexId v : side)
                for (VertexId w : g.neighbors(v))
                    if (v < w && sub.has_vertex(w)) sub.add_edge(v, w);
            return sub.is_tree();
        };
        if (induces_tree(a) && induces_tree(b)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("K4 is a display graph") {
    RecognitionResult r = is_display_graph(k4());
    CHECK(r.verdict == RecognitionResult::Verdict::Yes);
    REQUIRE(r.witnesses.has_value());
    const auto& [t1, t2] = *r.witnesses;
    LabeledGraph back = suppress(build_display_graph(t1, t2).graph);
    CHECK(graphs_isomorphic(back, k4()));
}

TEST_CASE("hard cubic graphs agree with brute force") {
    for (const LabeledGraph& g : {petersen(), k33()}) {
        bool expected = brute_force_two_trees(g);
        auto part = tree_arboricity_two(g);
        CHECK(part.has_value() == expected);
        RecognitionResult r = is_display_graph(g);
        if (expected)
            CHECK(r.verdict == RecognitionResult::Verdict::Yes);
        else
            CHECK(r.verdict == RecognitionResult::Verdict::No);
    }
}

TEST_CASE("random display graphs round-trip") {
    std::mt19937 rng(73);
    for (int i = 0; i < 15; ++i) {
        auto [t1, t2] = random_tree_pair_no_common_cherry(6, rng);
        LabeledGraph g = suppress(build_display_graph(t1, t2).graph);
        RecognitionResult r = is_display_graph(g);
        REQUIRE(r.verdict == RecognitionResult::Verdict::Yes);
        const auto& [w1, w2] = *r.witnesses;
        LabeledGraph back = suppress(build_display_graph(w1, w2).graph);
        CHECK(graphs_isomorphic(back, g));
    }
}

TEST_CASE("input validation") {
    SUBCASE("non-cubic") {
        LabeledGraph g = k4();
        VertexId v = g.add_vertex();
        g.add_edge(0, v);
        CHECK_THROWS_AS(tree_arboricity_two(g), NotCubic);
        CHECK(is_display_graph(g).verdict == RecognitionResult::Verdict::No);
    }
    SUBCASE("parallel edges") {
        LabeledGraph g;
        g.add_vertex();
        g.add_vertex();
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(tree_arboricity_two(g), NotSimple);
        CHECK(is_display_graph(g).verdict == RecognitionResult::Verdict::No);
    }
    SUBCASE("budget exhaustion reports Unknown") {
        SearchLimits limits;
        limits.max_nodes = 1;
        CHECK(is_display_graph(petersen(), limits).verdict ==
              RecognitionResult::Verdict::Unknown);
    }
}

TEST_CASE("reconstruct_trees rejects non-tree sides") {
    LabeledGraph g = k4();
    Bipartition bad{{0, 1, 2}, {3}};  // side {0,1,2} induces a triangle
    CHECK_THROWS_AS(reconstruct_trees(g, bad), InvalidPartition);
}
