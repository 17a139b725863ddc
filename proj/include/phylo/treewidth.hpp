#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phylo/graph.hpp"

namespace phylo {

// Bags over the vertices of some target graph plus a tree on bag indices.
struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;      // each sorted
    std::vector<std::pair<int, int>> tree;        // unordered bag-index pairs

    int width() const;
};

struct Violation {
    std::string property;  // "tw1", "tw2", "tw3", "tree"
    std::string witness;
};

struct ValidityReport {
    std::vector<Violation> violations;
    int width = -1;
    bool valid() const { return violations.empty(); }
    std::string summary() const;
};

// Checks (tw1) vertex coverage, (tw2) edge coverage, (tw3) running
// intersection, and that `tree` is a tree over bag indices. Violations are
// data, not errors.
ValidityReport validate_decomposition(const LabeledGraph& g, const TreeDecomposition& td);

struct TreewidthLimits {
    int dp_budget = 24;                     // max |V| for the subset-DP path
    std::uint64_t node_limit = 200'000'000; // branch-and-bound node budget
};

struct ExactResult {
    int width;
    TreeDecomposition td;
};

// Exact treewidth with a witnessing decomposition. Parallel edges are
// collapsed first. Subset DP up to dp_budget vertices; above that an
// iterative-deepening branch and bound over elimination orderings with
// minor-min-width pruning (up to 64 vertices after reductions).
// Throws BudgetExceeded with the best (lb, ub) found so far.
ExactResult exact_treewidth(const LabeledGraph& g, const TreewidthLimits& limits = {});

enum class UbStrategy { MinDegree, MinFill };

// Greedy elimination upper bound; result always validates. Ties broken by
// lowest vertex id.
ExactResult heuristic_ub(const LabeledGraph& g, UbStrategy strategy = UbStrategy::MinFill);

// Minor-min-width (MMD+) lower bound on treewidth.
int lower_bound_mmd(const LabeledGraph& g);

}  // namespace phylo
