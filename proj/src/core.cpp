#include "phylo/core.hpp"

#include <algorithm>
#include <set>

namespace phylo {

namespace {

std::vector<std::string> sorted_taxa(const LabeledGraph& g) {
    std::vector<std::string> taxa;
    for (const auto& [v, name] : g.labels()) taxa.push_back(name);
    std::sort(taxa.begin(), taxa.end());
    return taxa;
}

void check_leaf_labels(const LabeledGraph& g) {
    for (const auto& [v, name] : g.labels())
        if (g.degree(v) != 1 && g.num_vertices() > 1)
            throw DegreeViolation("labeled vertex '" + name + "' has degree " +
                                  std::to_string(g.degree(v)) + ", expected 1");
}

void check_internal_degree3(const LabeledGraph& g) {
    for (VertexId v : g.vertices())
        if (!g.label(v) && g.degree(v) != 3)
            throw DegreeViolation("unlabeled vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) + ", expected 3");
}

}  // namespace

PhyloTree make_phylo_tree(LabeledGraph g) {
    if (g.num_vertices() == 0) throw Error("empty tree");
    if (!g.is_tree()) {
        if (!g.is_connected()) throw Disconnected("tree is disconnected");
        throw Error("graph is not a tree");
    }
    check_leaf_labels(g);
    if (g.num_vertices() > 2) check_internal_degree3(g);
    // every leaf must carry a taxon
    for (VertexId v : g.vertices())
        if (g.degree(v) <= 1 && !g.label(v) && g.num_vertices() > 1)
            throw DegreeViolation("unlabeled leaf vertex " + std::to_string(v));
    if (g.labels().empty()) throw Error("tree has no taxa");
    auto taxa = sorted_taxa(g);
    return PhyloTree{std::move(g), std::move(taxa)};
}

PhyloNetwork make_phylo_network(LabeledGraph g) {
    if (g.num_vertices() == 0) throw Error("empty network");
    if (!g.is_simple()) throw NotSimple("network has parallel edges");
    if (!g.is_connected()) throw Disconnected("network is disconnected");
    check_leaf_labels(g);
    if (g.num_vertices() > 2) check_internal_degree3(g);
    for (VertexId v : g.vertices())
        if (g.degree(v) == 1 && !g.label(v))
            throw DegreeViolation("unlabeled leaf vertex " + std::to_string(v));
    if (g.labels().empty()) throw Error("network has no taxa");
    auto taxa = sorted_taxa(g);
    return PhyloNetwork{std::move(g), std::move(taxa)};
}

PhyloNetwork as_network(const PhyloTree& t) {
    return PhyloNetwork{t.graph, t.taxa};
}

namespace {

DisplayGraph build_display(const LabeledGraph& a, const std::vector<std::string>& taxa_a,
                           const LabeledGraph& b, const std::vector<std::string>& taxa_b) {
    if (taxa_a != taxa_b) throw TaxonMismatch("taxon sets differ");
    if (taxa_a.empty()) throw TaxonMismatch("empty taxon set");

    DisplayGraph d;
    d.taxa = taxa_a;

    for (VertexId v : a.vertices()) {
        VertexId nv = d.graph.add_vertex();
        d.first_to_display[v] = nv;
        if (auto name = a.label(v)) {
            d.graph.set_label(nv, *name);
            d.side[nv] = Side::Shared;
        } else {
            d.side[nv] = Side::First;
        }
    }
    for (VertexId v : b.vertices()) {
        if (auto name = b.label(v)) {
            d.second_to_display[v] = *d.graph.vertex_with_label(*name);
        } else {
            VertexId nv = d.graph.add_vertex();
            d.second_to_display[v] = nv;
            d.side[nv] = Side::Second;
        }
    }
    for (const Edge& e : a.edges())
        d.graph.add_edge(d.first_to_display.at(e.first), d.first_to_display.at(e.second));
    for (const Edge& e : b.edges())
        d.graph.add_edge(d.second_to_display.at(e.first), d.second_to_display.at(e.second));
    return d;
}

}  // namespace

DisplayGraph build_display_graph(const PhyloNetwork& a, const PhyloNetwork& b) {
    return build_display(a.graph, a.taxa, b.graph, b.taxa);
}

DisplayGraph build_display_graph(const PhyloTree& a, const PhyloTree& b) {
    return build_display(a.graph, a.taxa, b.graph, b.taxa);
}

DisplayGraph build_display_graph(const PhyloNetwork& a, const PhyloTree& b) {
    return build_display(a.graph, a.taxa, b.graph, b.taxa);
}

int reticulation_number(const PhyloNetwork& n) {
    return static_cast<int>(n.graph.num_edges()) - (static_cast<int>(n.graph.num_vertices()) - 1);
}

int level(const PhyloNetwork& n) {
    int best = 0;
    for (const auto& comp : biconnected_components(n.graph)) {
        std::set<VertexId> verts;
        for (const Edge& e : comp) {
            verts.insert(e.first);
            verts.insert(e.second);
        }
        int excess = static_cast<int>(comp.size()) - (static_cast<int>(verts.size()) - 1);
        best = std::max(best, excess);
    }
    return best;
}

}  // namespace phylo
