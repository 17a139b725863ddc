#pragma once

#include <string>

#include "phylo/core.hpp"
#include "phylo/treewidth.hpp"

namespace phylo {

enum class FileFormat { Newick, EdgeList, PaceGr, PaceTd };

// Newick. Branch lengths are parsed and discarded; a degree-2 artificial root
// is suppressed so the result is unrooted. Degenerate taxon counts (1 or 2)
// parse successfully.
PhyloTree parse_newick(const std::string& text);
std::string write_newick(const PhyloTree& t);

// Labeled edge-list format:
//   #taxa
//   <vertex-name> <taxon>
//   #edges
//   <u> <v>
// Vertex names are arbitrary tokens; ids are assigned in first-use order
// within each section, taxa first.
LabeledGraph read_edgelist(const std::string& text);
std::string write_edgelist(const LabeledGraph& g);

PhyloNetwork parse_network_edgelist(const std::string& text);
std::string write_network_edgelist(const PhyloNetwork& n);

// PACE 2017 interchange formats, 1-indexed.
//   .gr: "p tw <n> <m>" header plus one "u v" line per edge
//   .td: "s td <bags> <max-bag-size> <n>" header, "b <i> <v...>" bag lines,
//        then one "i j" line per decomposition-tree edge
// read_gr maps PACE vertex i to VertexId i-1; write_gr renumbers vertices to
// 1..n in ascending id order. write_td expects bag vertices in 0..n-1.
LabeledGraph read_gr(const std::string& text);
std::string write_gr(const LabeledGraph& g);

TreeDecomposition read_td(const std::string& text);
std::string write_td(const TreeDecomposition& td, int num_graph_vertices);

}  // namespace phylo
