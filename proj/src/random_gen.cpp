#include "phylo/random_gen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "phylo/display.hpp"

namespace phylo {

namespace {

std::size_t pick(std::size_t n, std::mt19937& rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// replace edge {u,v} by {u,m},{m,v} and return the new midpoint m
VertexId subdivide(LabeledGraph& g, const Edge& e) {
    VertexId m = g.add_vertex();
    g.remove_edge(e.first, e.second);
    g.add_edge(e.first, m);
    g.add_edge(m, e.second);
    return m;
}

std::set<std::pair<std::string, std::string>> cherries(const PhyloTree& t) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [v, name] : t.graph.labels())
        for (VertexId w : t.graph.neighbors(v))
            for (VertexId s : t.graph.neighbors(w)) {
                auto other = t.graph.label(s);
                if (s != v && other && name < *other) out.insert({name, *other});
            }
    return out;
}

}  // namespace

PhyloTree random_tree(int num_taxa, std::mt19937& rng) {
    if (num_taxa < 1) throw InvalidParams("random_tree: need at least one taxon");
    LabeledGraph g;
    VertexId a = g.add_vertex();
    g.set_label(a, "t0");
    if (num_taxa == 1) return make_phylo_tree(std::move(g));
    VertexId b = g.add_vertex();
    g.set_label(b, "t1");
    g.add_edge(a, b);
    for (int k = 2; k < num_taxa; ++k) {
        auto edges = g.edges();
        VertexId mid = subdivide(g, edges[pick(edges.size(), rng)]);
        VertexId leaf = g.add_vertex();
        g.add_edge(mid, leaf);
        g.set_label(leaf, "t" + std::to_string(k));
    }
    return make_phylo_tree(std::move(g));
}

PhyloNetwork random_network(int num_taxa, int reticulations, std::mt19937& rng) {
    if (num_taxa < 3) throw InvalidParams("random_network: need at least 3 taxa");
    LabeledGraph g = random_tree(num_taxa, rng).graph;
    for (int k = 0; k < reticulations; ++k) {
        auto edges = g.edges();
        VertexId m1 = subdivide(g, edges[pick(edges.size(), rng)]);
        // avoid the two halves around m1, so the bridging edge is never parallel
        std::vector<Edge> rest;
        for (const Edge& e : g.edges())
            if (e.first != m1 && e.second != m1) rest.push_back(e);
        VertexId m2 = subdivide(g, rest[pick(rest.size(), rng)]);
        g.add_edge(m1, m2);
    }
    return make_phylo_network(std::move(g));
}

PhyloTree random_displayed_tree(const PhyloNetwork& n, std::mt19937& rng) {
    auto edges = n.graph.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::map<VertexId, VertexId> parent;  // union-find
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        if (!parent.count(v)) parent[v] = v;
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    LabeledGraph span;
    for (VertexId v : n.graph.vertices()) {
        span.add_vertex(v);
        if (auto name = n.graph.label(v)) span.set_label(v, *name);
    }
    for (const Edge& e : edges) {
        VertexId ra = find(e.first), rb = find(e.second);
        if (ra == rb) continue;
        parent[ra] = rb;
        span.add_edge(e.first, e.second);
    }
    return restrict_and_suppress(span, n.taxa);
}

std::pair<PhyloTree, PhyloTree> random_tree_pair_no_common_cherry(int num_taxa,
                                                                  std::mt19937& rng) {
    if (num_taxa < 5)
        throw InvalidParams("random_tree_pair_no_common_cherry: need at least 5 taxa");
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        PhyloTree t1 = random_tree(num_taxa, rng);
        PhyloTree t2 = random_tree(num_taxa, rng);
        auto c1 = cherries(t1), c2 = cherries(t2);
        bool clash = false;
        for (const auto& c : c1)
            if (c2.count(c)) {
                clash = true;
                break;
            }
        if (!clash) return {std::move(t1), std::move(t2)};
    }
    throw Error("random_tree_pair_no_common_cherry: rejection sampling did not converge");
}

}  // namespace phylo
