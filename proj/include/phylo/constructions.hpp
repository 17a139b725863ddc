#pragma once

#include <map>
#include <string>

#include "phylo/bramble.hpp"
#include "phylo/core.hpp"
#include "phylo/display.hpp"
#include "phylo/treewidth.hpp"

namespace phylo {

// Grid family: a network shaped like an r x (n+1) grid with leaves on the
// horizontal edges, and a caterpillar tree weaving through its rows.
// Requires r even, r >= 2, n > 2r + 2.
struct GridParams {
    int r;
    int n;
};

// Network on taxa x_i_j with internal rows y/u/v; treewidth exactly r.
PhyloNetwork grid_network(const GridParams& p);

// Caterpillar tree on the same taxa, internal vertices z_i_j.
PhyloTree grid_tree(const GridParams& p);

// Canonical name ("y_2_3", "x_1_1", ...) to vertex id, for vertices that
// survive the construction's delete/suppress steps.
std::map<std::string, VertexId> grid_network_names(const GridParams& p);
std::map<std::string, VertexId> grid_tree_names(const GridParams& p);

// Verified embedding of grid_tree into grid_network: keep one row-linking
// column edge per adjacent row pair (column n for odd rows, column 0 for even
// rows), drop all other vertical connections.
EmbeddingCertificate grid_embedding(const GridParams& p);

// Explicit width-r path decomposition of grid_network: a sliding column
// window of r vertices stepped one add/delete pair at a time, with {x,y}
// leaf bags attached.
TreeDecomposition grid_path_decomposition(const GridParams& p);

// Display graph of (grid_network, grid_tree), both raw and with the degree-2
// taxon vertices suppressed (ids preserved), plus a name table over the
// suppressed graph (network-side y/u/v and tree-side z).
struct GridDisplay {
    DisplayGraph raw;
    LabeledGraph suppressed;
    std::map<std::string, VertexId> names;
};
GridDisplay grid_display(const GridParams& p);

// Bramble over grid_display(p).suppressed certifying tw >= 2r: row/column
// crosses S_i_j and T_i_j plus the End and Top sets;
// (r-1)(n-1) + r(n-1) + 2 elements.
Bramble grid_bramble(const GridParams& p);

}  // namespace phylo
