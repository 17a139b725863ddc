#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "phylo/core.hpp"
#include "phylo/random_gen.hpp"
#include "phylo/treewidth.hpp"

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

LabeledGraph complete(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

LabeledGraph grid(int r, int c) {
    LabeledGraph g;
    for (int i = 0; i < r * c; ++i) g.add_vertex();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (j + 1 < c) g.add_edge(i * c + j, i * c + j + 1);
            if (i + 1 < r) g.add_edge(i * c + j, (i + 1) * c + j);
        }
    return g;
}

void check_exact(const LabeledGraph& g, int expected) {
    ExactResult r = exact_treewidth(g);
    CHECK(r.width == expected);
    ValidityReport rep = validate_decomposition(g, r.td);
    CHECK(rep.valid());
    CHECK(rep.width == expected);
}

}  // namespace

TEST_CASE("exact treewidth on known graphs") {
    check_exact(path(8), 1);
    check_exact(cycle(5), 2);
    check_exact(cycle(9), 2);
    check_exact(complete(4), 3);
    check_exact(complete(6), 5);
    check_exact(grid(3, 3), 3);
    check_exact(grid(2, 6), 2);

    LabeledGraph single;
    single.add_vertex();
    check_exact(single, 0);
}

TEST_CASE("parallel edges do not change treewidth") {
    LabeledGraph g = cycle(4);
    g.add_edge(0, 1);
    check_exact(g, 2);
}

TEST_CASE("validate_decomposition reports each property") {
    LabeledGraph g = cycle(4);

    SUBCASE("trivial single bag is valid") {
        TreeDecomposition td{{{0, 1, 2, 3}}, {}};
        CHECK(validate_decomposition(g, td).valid());
    }
    SUBCASE("missing vertex") {
        TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
        auto rep = validate_decomposition(g, td);  // edge {0,3} uncovered
        REQUIRE_FALSE(rep.valid());
        CHECK(rep.violations[0].property == "tw2");
    }
    SUBCASE("uncovered vertex") {
        TreeDecomposition td{{{0, 1}}, {}};
        auto rep = validate_decomposition(g, td);
        bool saw_tw1 = false;
        for (const auto& v : rep.violations) saw_tw1 |= v.property == "tw1";
        CHECK(saw_tw1);
    }
    SUBCASE("running intersection violated") {
        TreeDecomposition td{{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {}};
        // no tree edges at all over 5 bags: not a tree
        auto rep = validate_decomposition(g, td);
        bool saw_tree = false;
        for (const auto& v : rep.violations) saw_tree |= v.property == "tree";
        CHECK(saw_tree);

        TreeDecomposition td2{{{0, 1}, {2, 3}, {0, 3}, {1, 2}},
                              {{0, 1}, {1, 2}, {2, 3}}};
        auto rep2 = validate_decomposition(g, td2);  // vertex 0 in bags 0 and 2 only
        REQUIRE_FALSE(rep2.valid());
        bool saw_tw3 = false;
        for (const auto& v : rep2.violations) saw_tw3 |= v.property == "tw3";
        CHECK(saw_tw3);
    }
}

TEST_CASE("bounds sandwich the exact value") {
    std::mt19937 rng(41);
    for (int i = 0; i < 15; ++i) {
        PhyloNetwork n = random_network(6, 3, rng);
        LabeledGraph g = n.graph;
        ExactResult exact = exact_treewidth(g);
        CHECK(lower_bound_mmd(g) <= exact.width);
        for (UbStrategy s : {UbStrategy::MinFill, UbStrategy::MinDegree}) {
            ExactResult ub = heuristic_ub(g, s);
            CHECK(ub.width >= exact.width);
            CHECK(validate_decomposition(g, ub.td).valid());
        }
    }
}

TEST_CASE("branch and bound agrees with the subset dp") {
    std::mt19937 rng(43);
    TreewidthLimits tiny;
    tiny.dp_budget = 4;  // force the branch-and-bound path
    for (int i = 0; i < 10; ++i) {
        PhyloNetwork n = random_network(5, 2, rng);
        ExactResult dp = exact_treewidth(n.graph);
        ExactResult bb = exact_treewidth(n.graph, tiny);
        CHECK(dp.width == bb.width);
        CHECK(validate_decomposition(n.graph, bb.td).valid());
    }
}

TEST_CASE("adding an edge raises treewidth by at most one") {
    std::mt19937 rng(47);
    for (int i = 0; i < 10; ++i) {
        PhyloNetwork n = random_network(5, 2, rng);
        LabeledGraph g = n.graph;
        int before = exact_treewidth(g).width;
        auto vs = g.vertices();
        std::uniform_int_distribution<std::size_t> d(0, vs.size() - 1);
        VertexId u = vs[d(rng)], v = vs[d(rng)];
        if (u == v) continue;
        g.add_edge(u, v);
        int after = exact_treewidth(g).width;
        CHECK(after >= before);
        CHECK(after <= before + 1);
    }
}

TEST_CASE("node limit is enforced") {
    TreewidthLimits limits;
    limits.dp_budget = 4;
    limits.node_limit = 1;
    std::mt19937 rng(1);
    PhyloNetwork n = random_network(8, 6, rng);
    CHECK_THROWS_AS(exact_treewidth(n.graph, limits), BudgetExceeded);
}

TEST_CASE("trees and forests of cliques have the expected width") {
    // shapes that exercise the safe-reduction order: a star's center must not
    // be eliminated at degree 2 before the remaining leaves
    LabeledGraph star;
    for (int i = 0; i < 4; ++i) star.add_vertex();
    for (int i = 1; i < 4; ++i) star.add_edge(0, i);
    check_exact(star, 1);

    LabeledGraph spider;
    for (int i = 0; i < 7; ++i) spider.add_vertex();
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})
        spider.add_edge(u, v);
    check_exact(spider, 1);
}
