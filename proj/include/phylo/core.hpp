#pragma once

#include <map>
#include <string>
#include <vector>

#include "phylo/graph.hpp"

namespace phylo {

// Unrooted binary phylogenetic tree on taxon set X: labeled vertices are
// leaves (degree 1), label map is a bijection onto X, unlabeled vertices have
// degree 3. Degenerate cases |X| = 1 (single labeled vertex) and |X| = 2
// (single edge) are accepted; operations that need |X| >= 3 check it themselves.
struct PhyloTree {
    LabeledGraph graph;
    std::vector<std::string> taxa;  // sorted
};

// Unrooted binary phylogenetic network: simple, connected, |X| degree-1
// vertices bijectively labeled by X, all others degree 3.
struct PhyloNetwork {
    LabeledGraph graph;
    std::vector<std::string> taxa;  // sorted
};

enum class Side { First, Second, Shared };

struct DisplayGraph {
    LabeledGraph graph;
    std::vector<std::string> taxa;
    std::map<VertexId, Side> side;
    // original vertex id -> display-graph vertex id (taxa map to the shared vertex)
    std::map<VertexId, VertexId> first_to_display;
    std::map<VertexId, VertexId> second_to_display;
};

// Throws (DegreeViolation / Disconnected / NotSimple / DuplicateTaxon) on
// invariant violations; returns the validated value.
PhyloTree make_phylo_tree(LabeledGraph g);
PhyloNetwork make_phylo_network(LabeledGraph g);

PhyloNetwork as_network(const PhyloTree& t);  // every tree is an r = 0 network

// Disjoint union with same-label leaves identified. Taxon sets must agree.
DisplayGraph build_display_graph(const PhyloNetwork& a, const PhyloNetwork& b);
DisplayGraph build_display_graph(const PhyloTree& a, const PhyloTree& b);
DisplayGraph build_display_graph(const PhyloNetwork& a, const PhyloTree& b);

// r(N) = |E| - (|V| - 1)
int reticulation_number(const PhyloNetwork& n);

// max over biconnected components C of |E(C)| - (|V(C)| - 1); cut edges
// contribute 0. A network is level-k iff this value is at most k.
int level(const PhyloNetwork& n);

}  // namespace phylo
