#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phylo/bramble.hpp"
#include "phylo/constructions.hpp"
#include "phylo/core.hpp"
#include "phylo/display.hpp"
#include "phylo/io.hpp"
#include "phylo/random_gen.hpp"
#include "phylo/recognition.hpp"
#include "phylo/transforms.hpp"
#include "phylo/treewidth.hpp"

namespace py = pybind11;
using namespace phylo;

PYBIND11_MODULE(_phylo, m) {
    m.doc() = "display graphs of phylogenetic trees and networks";

    py::register_exception<Error>(m, "PhyloError");

    py::class_<LabeledGraph>(m, "LabeledGraph")
        .def(py::init<>())
        .def("add_vertex", [](LabeledGraph& g) { return g.add_vertex(); })
        .def("add_vertex", [](LabeledGraph& g, VertexId v) { return g.add_vertex(v); })
        .def("add_edge", &LabeledGraph::add_edge)
        .def("remove_edge", &LabeledGraph::remove_edge)
        .def("set_label", &LabeledGraph::set_label)
        .def("label", &LabeledGraph::label)
        .def("num_vertices", &LabeledGraph::num_vertices)
        .def("num_edges", &LabeledGraph::num_edges)
        .def("degree", &LabeledGraph::degree)
        .def("vertices", &LabeledGraph::vertices)
        .def("edges", &LabeledGraph::edges)
        .def("neighbors", &LabeledGraph::neighbors)
        .def("is_simple", &LabeledGraph::is_simple)
        .def("is_connected", &LabeledGraph::is_connected)
        .def("is_tree", &LabeledGraph::is_tree);

    m.def("suppress", &suppress);
    m.def("graphs_isomorphic", &graphs_isomorphic);
    m.def("canonical_form", &canonical_form);

    py::class_<PhyloTree>(m, "PhyloTree")
        .def_readonly("graph", &PhyloTree::graph)
        .def_readonly("taxa", &PhyloTree::taxa)
        .def("__repr__", [](const PhyloTree& t) { return write_newick(t); });

    py::class_<PhyloNetwork>(m, "PhyloNetwork")
        .def_readonly("graph", &PhyloNetwork::graph)
        .def_readonly("taxa", &PhyloNetwork::taxa);

    py::class_<DisplayGraph>(m, "DisplayGraph")
        .def_readonly("graph", &DisplayGraph::graph)
        .def_readonly("taxa", &DisplayGraph::taxa);

    m.def("parse_newick", &parse_newick);
    m.def("write_newick", &write_newick);
    m.def("parse_network_edgelist", &parse_network_edgelist);
    m.def("write_network_edgelist", &write_network_edgelist);
    m.def("read_gr", &read_gr);
    m.def("write_gr", &write_gr);
    m.def("read_td", &read_td);
    m.def("write_td", &write_td);

    m.def("as_network", &as_network);
    m.def("build_display_graph",
          py::overload_cast<const PhyloTree&, const PhyloTree&>(&build_display_graph));
    m.def("build_display_graph",
          py::overload_cast<const PhyloNetwork&, const PhyloTree&>(&build_display_graph));
    m.def("reticulation_number", &reticulation_number);
    m.def("level", &level);

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def(py::init<>())
        .def_readwrite("bags", &TreeDecomposition::bags)
        .def_readwrite("tree", &TreeDecomposition::tree)
        .def("width", &TreeDecomposition::width);

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("width", &ValidityReport::width)
        .def("valid", &ValidityReport::valid)
        .def("summary", &ValidityReport::summary);

    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("width", &ExactResult::width)
        .def_readonly("td", &ExactResult::td);

    m.def("validate_decomposition", &validate_decomposition);
    m.def(
        "exact_treewidth",
        [](const LabeledGraph& g) { return exact_treewidth(g); },
        py::call_guard<py::gil_scoped_release>());
    m.def("heuristic_ub", [](const LabeledGraph& g, const std::string& strategy) {
        return heuristic_ub(g, strategy == "min-degree" ? UbStrategy::MinDegree
                                                        : UbStrategy::MinFill);
    });
    m.def("lower_bound_mmd", &lower_bound_mmd);

    py::class_<EmbeddingCertificate>(m, "EmbeddingCertificate")
        .def_readonly("image_edges", &EmbeddingCertificate::image_edges)
        .def_readonly("vertex_map", &EmbeddingCertificate::vertex_map);

    m.def("verify_embedding", &verify_embedding);
    m.def(
        "find_display",
        [](const PhyloNetwork& n, const PhyloTree& t) { return find_display(n, t); },
        py::call_guard<py::gil_scoped_release>());
    m.def("displays_via_quartets",
          [](const PhyloNetwork& n, const PhyloTree& t) { return displays_via_quartets(n, t); });
    m.def("quartet_set", [](const PhyloTree& t) {
        std::vector<std::string> out;
        for (const Quartet& q : quartet_set(t)) out.push_back(q.str());
        return out;
    });
    m.def("restrict_and_suppress", &restrict_and_suppress);
    m.def("labeled_tree_isomorphic", &labeled_tree_isomorphic);

    py::class_<BoundBundle>(m, "BoundBundle")
        .def_readonly("two_tw_plus_1", &BoundBundle::two_tw_plus_1)
        .def_readonly("retic_plus_2", &BoundBundle::retic_plus_2)
        .def_readonly("level_plus_2", &BoundBundle::level_plus_2)
        .def_readonly("min", &BoundBundle::min);

    m.def("doubling_transform", &doubling_transform);
    m.def("level_transform", &level_transform);
    m.def("bound_bundle", &bound_bundle);

    py::class_<Bramble>(m, "Bramble")
        .def(py::init<>())
        .def_readwrite("elements", &Bramble::elements);

    py::class_<HittingSet>(m, "HittingSet")
        .def_readonly("size", &HittingSet::size)
        .def_readonly("vertices", &HittingSet::vertices);

    m.def("verify_bramble", &verify_bramble);
    m.def(
        "min_hitting_set",
        [](const LabeledGraph& g, const Bramble& b) { return min_hitting_set(g, b); },
        py::call_guard<py::gil_scoped_release>());
    m.def("tw_lower_bound",
          [](const LabeledGraph& g, const Bramble& b) { return tw_lower_bound(g, b); });

    py::class_<GridParams>(m, "GridParams")
        .def(py::init<int, int>())
        .def_readwrite("r", &GridParams::r)
        .def_readwrite("n", &GridParams::n);

    m.def("grid_network", &grid_network);
    m.def("grid_tree", &grid_tree);
    m.def("grid_embedding", &grid_embedding);
    m.def("grid_path_decomposition", &grid_path_decomposition);
    m.def("grid_bramble", &grid_bramble);
    m.def("grid_display_suppressed",
          [](const GridParams& p) { return grid_display(p).suppressed; });

    py::class_<RecognitionResult>(m, "RecognitionResult")
        .def_property_readonly("verdict",
                               [](const RecognitionResult& r) {
                                   switch (r.verdict) {
                                       case RecognitionResult::Verdict::Yes: return "yes";
                                       case RecognitionResult::Verdict::No: return "no";
                                       default: return "unknown";
                                   }
                               })
        .def_readonly("witnesses", &RecognitionResult::witnesses)
        .def_readonly("reason", &RecognitionResult::reason);

    m.def(
        "is_display_graph", [](const LabeledGraph& g) { return is_display_graph(g); },
        py::call_guard<py::gil_scoped_release>());

    m.def("random_tree", [](int taxa, unsigned seed) {
        std::mt19937 rng(seed);
        return random_tree(taxa, rng);
    });
    m.def("random_network", [](int taxa, int retics, unsigned seed) {
        std::mt19937 rng(seed);
        return random_network(taxa, retics, rng);
    });
}
