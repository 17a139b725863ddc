#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phylo/core.hpp"
#include "phylo/display.hpp"  // SearchLimits

namespace phylo {

using Bipartition = std::pair<std::vector<VertexId>, std::vector<VertexId>>;

// Bipartition of V(g) where both sides induce trees (connected and acyclic),
// or nullopt if none exists. g must be simple, connected, and cubic.
// Backtracking over vertices; assignments that close a same-side cycle are
// pruned immediately.
std::optional<Bipartition> tree_arboricity_two(const LabeledGraph& g,
                                               const SearchLimits& limits = {});

// Subdivide every crossing edge of the bipartition with a fresh labeled leaf;
// the two sides become phylogenetic trees on a common taxon set whose display
// graph suppresses back to g.
std::pair<PhyloTree, PhyloTree> reconstruct_trees(const LabeledGraph& g, const Bipartition& part);

struct RecognitionResult {
    enum class Verdict { Yes, No, Unknown } verdict;
    std::optional<std::pair<PhyloTree, PhyloTree>> witnesses;
    std::string reason;  // set for No / Unknown
};

// Is g the suppressed display graph of some pair of trees? Validation
// failures yield No with a reason; search-budget exhaustion yields Unknown.
RecognitionResult is_display_graph(const LabeledGraph& g, const SearchLimits& limits = {});

}  // namespace phylo
