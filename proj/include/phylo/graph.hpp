#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "phylo/errors.hpp"

namespace phylo {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // always stored with first < second

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Undirected multigraph with optional taxon labels on vertices.
// Vertex ids are arbitrary non-negative integers; add_vertex() hands out
// dense ids in construction order. All iteration orders are sorted, so
// anything built on top is reproducible bit-for-bit.
class LabeledGraph {
public:
    VertexId add_vertex();
    void add_vertex(VertexId v);
    void add_edge(VertexId u, VertexId v);       // parallel edges allowed, self-loops rejected
    void remove_edge(VertexId u, VertexId v);    // removes one parallel copy
    void remove_vertex(VertexId v);              // removes incident edges too

    void set_label(VertexId v, const std::string& taxon);
    void clear_label(VertexId v);
    void clear_labels();

    bool has_vertex(VertexId v) const { return adj_.count(v) > 0; }
    bool has_edge(VertexId u, VertexId v) const { return edge_multiplicity(u, v) > 0; }
    int edge_multiplicity(VertexId u, VertexId v) const;

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    int degree(VertexId v) const;  // counts parallel edges

    std::vector<VertexId> vertices() const;
    std::vector<Edge> edges() const;  // sorted, parallel copies repeated
    std::vector<VertexId> neighbors(VertexId v) const;  // sorted, distinct

    const std::map<VertexId, std::string>& labels() const { return labels_; }
    std::optional<std::string> label(VertexId v) const;
    std::optional<VertexId> vertex_with_label(const std::string& taxon) const;

    bool is_simple() const;
    bool is_connected() const;
    bool is_tree() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    const std::map<VertexId, int>& row(VertexId v) const;

    std::map<VertexId, std::map<VertexId, int>> adj_;  // neighbor -> multiplicity
    std::map<VertexId, std::string> labels_;
    std::map<std::string, VertexId> by_label_;
    std::size_t num_edges_ = 0;
    VertexId next_id_ = 0;
};

// Labels erased, degree-2 vertices iteratively suppressed (path u-v-w becomes
// edge u-w). May create parallel edges. A degree-2 vertex whose both edges go
// to the same neighbor is left alone (suppressing it would create a self-loop).
// Surviving vertices keep their ids.
LabeledGraph suppress(const LabeledGraph& g);

// Partition of the edge multiset into biconnected components (each component
// given as a list of edges; parallel copies repeated). Requires a connected
// input. Components are emitted in a deterministic order.
std::vector<std::vector<Edge>> biconnected_components(const LabeledGraph& g);

// Plain structural isomorphism (labels ignored), by backtracking matching
// with degree-signature pruning. Intended for desk-scale graphs.
bool graphs_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// Canonical string form of an unlabeled graph (lexicographically minimal
// adjacency encoding). Exponential in the worst case; fine for small graphs.
std::string canonical_form(const LabeledGraph& g);

}  // namespace phylo
