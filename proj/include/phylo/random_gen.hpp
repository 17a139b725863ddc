#pragma once

#include <random>
#include <utility>

#include "phylo/core.hpp"

namespace phylo {

// Random unrooted binary tree on taxa t0..t{k-1}: start from the edge t0-t1,
// attach each next leaf to a uniformly chosen edge.
PhyloTree random_tree(int num_taxa, std::mt19937& rng);

// Random binary network: random tree, then `reticulations` times subdivide
// two edges and join the midpoints (never creating a parallel edge).
PhyloNetwork random_network(int num_taxa, int reticulations, std::mt19937& rng);

// A tree the network displays: the restriction of a random spanning tree.
PhyloTree random_displayed_tree(const PhyloNetwork& n, std::mt19937& rng);

// Pair of trees on a shared taxon set with no common cherry (rejection
// sampling; needs num_taxa >= 5 to terminate reliably).
std::pair<PhyloTree, PhyloTree> random_tree_pair_no_common_cherry(int num_taxa,
                                                                  std::mt19937& rng);

}  // namespace phylo
