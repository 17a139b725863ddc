#pragma once

#include "phylo/display.hpp"
#include "phylo/treewidth.hpp"

namespace phylo {

// The three constructive upper bounds on tw(D(N,T)) and their minimum.
struct BoundBundle {
    int two_tw_plus_1;
    int retic_plus_2;
    int level_plus_2;
    int min;
};

// Doubling transform: given a tree decomposition of N and a verified embedding
// of T into N, produce a decomposition of D(N,T) by adding f(u') to every bag
// containing u', for each image vertex u'. Output validates against the
// display graph; width <= 2*width(td_n) + 1.
TreeDecomposition doubling_transform(const PhyloNetwork& n, const PhyloTree& t,
                                     const TreeDecomposition& td_n,
                                     const EmbeddingCertificate& cert);

// Level-based transform: extends the embedding's image to a spanning tree T'
// of N (greedy, ascending edge order), builds the explicit chain decomposition
// of D(T',T) (singleton bags per T'-vertex, edge bags per T'-edge, with the
// two insertion cases for edges of T), then covers the edges missing from each
// nontrivial biconnected component by a minimal vertex cover added to that
// component's region of bags. Output validates; width <= level(n) + 2.
TreeDecomposition level_transform(const PhyloNetwork& n, const PhyloTree& t,
                                  const EmbeddingCertificate& cert);

// All three bounds, each cross-checked by running the corresponding transform
// and validating the produced decomposition (the r+2 bound is certified by the
// level transform since level <= r). td_n must be a valid decomposition of N.
BoundBundle bound_bundle(const PhyloNetwork& n, const PhyloTree& t,
                         const EmbeddingCertificate& cert, const TreeDecomposition& td_n);

}  // namespace phylo
