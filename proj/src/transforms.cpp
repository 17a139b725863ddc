#include "phylo/transforms.hpp"

#include <algorithm>
#include <set>

namespace phylo {

namespace {

void require_verified(const PhyloNetwork& n, const PhyloTree& t,
                      const EmbeddingCertificate& cert) {
    auto report = verify_embedding(n, t, cert);
    if (!report.valid()) throw InvalidCertificate(report.summary());
}

void require_valid(const LabeledGraph& g, const TreeDecomposition& td, const std::string& what) {
    auto report = validate_decomposition(g, td);
    if (!report.valid()) throw InvalidDecomposition(what + ": " + report.summary());
}

}  // namespace

TreeDecomposition doubling_transform(const PhyloNetwork& n, const PhyloTree& t,
                                     const TreeDecomposition& td_n,
                                     const EmbeddingCertificate& cert) {
    if (t.taxa.size() < 3) throw TooFewTaxa("doubling_transform requires at least 3 taxa");
    require_verified(n, t, cert);
    require_valid(n.graph, td_n, "input decomposition");

    DisplayGraph d = build_display_graph(n, t);
    TreeDecomposition out;
    out.tree = td_n.tree;
    for (const auto& bag : td_n.bags) {
        std::set<VertexId> nb;
        for (VertexId v : bag) {
            nb.insert(d.first_to_display.at(v));
            auto it = cert.vertex_map.find(v);
            if (it != cert.vertex_map.end()) nb.insert(d.second_to_display.at(it->second));
        }
        out.bags.emplace_back(nb.begin(), nb.end());
    }
    require_valid(d.graph, out, "doubling_transform output");
    if (out.width() > 2 * td_n.width() + 1)
        throw Error("doubling_transform: width bound violated");
    return out;
}

TreeDecomposition level_transform(const PhyloNetwork& n, const PhyloTree& t,
                                  const EmbeddingCertificate& cert) {
    if (t.taxa.size() < 3) throw TooFewTaxa("level_transform requires at least 3 taxa");
    require_verified(n, t, cert);

    // Steiner subtree of the image (drops any unlabeled pendant parts of the
    // image) and the per-T-vertex anchor a' in N via labeled isomorphism.
    LabeledGraph image;
    for (const Edge& e : cert.image_edges) {
        if (!image.has_vertex(e.first)) image.add_vertex(e.first);
        if (!image.has_vertex(e.second)) image.add_vertex(e.second);
        image.add_edge(e.first, e.second);
    }
    for (VertexId v : image.vertices())
        if (auto name = n.graph.label(v)) image.set_label(v, *name);
    SteinerRestriction res = restrict_tracked(image, t.taxa);
    auto iso = labeled_tree_isomorphism(res.suppressed, t);
    if (!iso) throw InvalidCertificate("image does not embed T");
    std::map<VertexId, VertexId> anchor;  // V(T) -> V(N)
    for (const auto& [nv, tv] : *iso) anchor[tv] = nv;

    // grow the image into a spanning tree T' of N, adding edges in ascending order
    LabeledGraph tprime = res.steiner;
    while (tprime.num_vertices() < n.graph.num_vertices()) {
        bool grew = false;
        for (const Edge& e : n.graph.edges()) {
            bool hu = tprime.has_vertex(e.first), hv = tprime.has_vertex(e.second);
            if (hu == hv) continue;
            if (!hu) tprime.add_vertex(e.first);
            if (!hv) tprime.add_vertex(e.second);
            tprime.add_edge(e.first, e.second);
            grew = true;
        }
        if (!grew) throw Error("level_transform: network is not connected");
    }

    DisplayGraph d = build_display_graph(n, t);
    auto A = [&](VertexId v) { return d.first_to_display.at(v); };
    auto B = [&](VertexId v) { return d.second_to_display.at(v); };

    // chain decomposition of D(T',T): singleton bag per T'-vertex, a chain of
    // bags per T'-edge (initially one edge bag), anchors get their T-vertex
    std::vector<std::set<VertexId>> bags;
    std::map<VertexId, int> singleton;              // T'-vertex -> bag index
    std::map<Edge, std::vector<int>> chain;         // oriented e.first -> e.second
    for (VertexId v : tprime.vertices()) {
        singleton[v] = static_cast<int>(bags.size());
        bags.push_back({A(v)});
    }
    for (const auto& [tv, nv] : anchor) bags[singleton.at(nv)].insert(B(tv));
    for (const Edge& e : tprime.edges()) {
        chain[e] = {static_cast<int>(bags.size())};
        bags.push_back({A(e.first), A(e.second)});
    }

    // path in T' between two vertices, as an ordered vertex list
    auto tree_path = [&](VertexId from, VertexId to) {
        std::map<VertexId, VertexId> parent;
        std::vector<VertexId> queue{from};
        parent[from] = from;
        for (std::size_t i = 0; i < queue.size() && !parent.count(to); ++i)
            for (VertexId w : tprime.neighbors(queue[i]))
                if (!parent.count(w)) {
                    parent[w] = queue[i];
                    queue.push_back(w);
                }
        std::vector<VertexId> path;
        for (VertexId v = to;; v = parent.at(v)) {
            path.push_back(v);
            if (v == from) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (const Edge& te : t.graph.edges()) {
        VertexId a = te.first, b = te.second;
        auto path = tree_path(anchor.at(a), anchor.at(b));  // a', v1, ..., b'
        if (path.size() == 2) {
            // image edge {a',b'}: replace its edge bag with {a,a',b}, {a',b',b}
            Edge e = make_edge(path[0], path[1]);
            int near_a = chain.at(e).front();
            int near_b = static_cast<int>(bags.size());
            bags[near_a] = {B(a), A(path[0]), B(b)};
            bags.push_back({A(path[0]), A(path[1]), B(b)});
            chain[e] = e.first == path[0] ? std::vector<int>{near_a, near_b}
                                          : std::vector<int>{near_b, near_a};
        } else {
            // path a', v1, ..., vt, b': add a to bag {a',v1}, a and b to the
            // singleton of v1, and b to every remaining bag of the chain
            bags[chain.at(make_edge(path[0], path[1])).front()].insert(B(a));
            bags[singleton.at(path[1])].insert(B(a));
            bags[singleton.at(path[1])].insert(B(b));
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                bags[chain.at(make_edge(path[i], path[i + 1])).front()].insert(B(b));
                if (i >= 2) bags[singleton.at(path[i])].insert(B(b));
            }
        }
    }

    // cover the edges missing from each nontrivial biconnected component:
    // add a minimal vertex cover of M(C) to every bag anchored in C
    for (const auto& comp : biconnected_components(n.graph)) {
        if (comp.size() < 2) continue;
        std::set<VertexId> comp_verts;
        std::vector<Edge> missing;
        std::vector<Edge> tree_edges;
        for (const Edge& e : comp) {
            comp_verts.insert(e.first);
            comp_verts.insert(e.second);
            (tprime.has_edge(e.first, e.second) ? tree_edges : missing).push_back(e);
        }
        if (missing.empty()) continue;

        // greedy cover, most-covering endpoint first, ties by id; then prune
        std::vector<VertexId> cover;
        std::set<Edge> uncovered(missing.begin(), missing.end());
        while (!uncovered.empty()) {
            std::map<VertexId, int> gain;
            for (const Edge& e : uncovered) {
                ++gain[e.first];
                ++gain[e.second];
            }
            VertexId best = gain.begin()->first;
            for (const auto& [v, c] : gain)
                if (c > gain.at(best)) best = v;
            cover.push_back(best);
            std::erase_if(uncovered,
                          [&](const Edge& e) { return e.first == best || e.second == best; });
        }
        for (auto it = cover.begin(); it != cover.end();) {
            bool redundant = true;
            for (const Edge& e : missing) {
                bool hit = false;
                for (VertexId v : cover)
                    if (v != *it && (e.first == v || e.second == v)) hit = true;
                if (!hit && (e.first == *it || e.second == *it)) redundant = false;
            }
            it = redundant ? cover.erase(it) : it + 1;
        }

        std::vector<int> region;
        for (VertexId v : comp_verts) region.push_back(singleton.at(v));
        for (const Edge& e : tree_edges)
            for (int i : chain.at(e)) region.push_back(i);
        for (int i : region)
            for (VertexId v : cover) bags[i].insert(A(v));
    }

    TreeDecomposition out;
    for (const auto& bag : bags) out.bags.emplace_back(bag.begin(), bag.end());
    for (const auto& [e, ch] : chain) {
        out.tree.push_back({singleton.at(e.first), ch.front()});
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) out.tree.push_back({ch[i], ch[i + 1]});
        out.tree.push_back({ch.back(), singleton.at(e.second)});
    }

    require_valid(d.graph, out, "level_transform output");
    if (out.width() > level(n) + 2) throw Error("level_transform: width bound violated");
    return out;
}

BoundBundle bound_bundle(const PhyloNetwork& n, const PhyloTree& t,
                         const EmbeddingCertificate& cert, const TreeDecomposition& td_n) {
    TreeDecomposition by_tw = doubling_transform(n, t, td_n, cert);
    TreeDecomposition by_level = level_transform(n, t, cert);

    BoundBundle b;
    b.two_tw_plus_1 = 2 * td_n.width() + 1;
    b.retic_plus_2 = reticulation_number(n) + 2;
    b.level_plus_2 = level(n) + 2;
    b.min = std::min({b.two_tw_plus_1, b.retic_plus_2, b.level_plus_2});
    if (by_tw.width() > b.two_tw_plus_1 || by_level.width() > b.level_plus_2 ||
        b.level_plus_2 > b.retic_plus_2)
        throw Error("bound_bundle: cross-check failed");
    return b;
}

}  // namespace phylo
