#pragma once

#include <string>
#include <vector>

#include "phylo/display.hpp"  // SearchLimits
#include "phylo/treewidth.hpp"

namespace phylo {

// Family of vertex sets of a host graph. Valid when every element induces a
// connected subgraph and every pair of elements touches (intersects or is
// joined by a host edge). Elements may reference vertices absent from the
// host; those are dropped before checking.
struct Bramble {
    std::vector<std::vector<VertexId>> elements;
};

ValidityReport verify_bramble(const LabeledGraph& g, const Bramble& b);

struct HittingSet {
    int size;
    std::vector<VertexId> vertices;  // sorted
};

// Exact minimum hitting set by branch and bound: branch on the unhit element
// with the fewest candidate vertices, dedupe vertices by element-membership
// signature, lower-bound by greedy packing of pairwise-disjoint unhit
// elements, memoize refuted unhit-sets. Requires a valid bramble.
HittingSet min_hitting_set(const LabeledGraph& g, const Bramble& b,
                           const SearchLimits& limits = {});

// order(b) - 1, certified via Seymour-Thomas (tw = bramble number - 1).
int tw_lower_bound(const LabeledGraph& g, const Bramble& b, const SearchLimits& limits = {});

// One element per line, vertex ids space-separated.
std::string write_bramble(const Bramble& b);
Bramble read_bramble(const std::string& text);

}  // namespace phylo
