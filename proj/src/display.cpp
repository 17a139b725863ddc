#include "phylo/display.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace phylo {

// ---- certificate verification ----------------------------------------------

ValidityReport verify_embedding(const PhyloNetwork& n, const PhyloTree& t,
                                const EmbeddingCertificate& cert) {
    ValidityReport report;
    auto fail = [&](const std::string& prop, const std::string& witness) {
        report.violations.push_back({prop, witness});
    };

    // image must be a set of N-edges forming a subtree
    LabeledGraph image;
    for (const Edge& e : cert.image_edges) {
        if (!n.graph.has_edge(e.first, e.second)) {
            fail("image", "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              "} not in N");
            continue;
        }
        if (!image.has_vertex(e.first)) image.add_vertex(e.first);
        if (!image.has_vertex(e.second)) image.add_vertex(e.second);
        if (image.has_edge(e.first, e.second)) {
            fail("image", "duplicate image edge");
            continue;
        }
        image.add_edge(e.first, e.second);
    }
    if (!report.violations.empty()) return report;
    if (!image.is_tree()) {
        fail("image", "image edges do not form a tree");
        return report;
    }

    // f is defined exactly on V(N') and is a surjection onto V(T)
    std::set<VertexId> image_verts;
    for (VertexId v : image.vertices()) image_verts.insert(v);
    for (const auto& [u, fu] : cert.vertex_map) {
        if (!image_verts.count(u))
            fail("map", "f defined on vertex " + std::to_string(u) + " outside the image");
        if (!t.graph.has_vertex(fu))
            fail("map", "f maps to unknown T-vertex " + std::to_string(fu));
    }
    for (VertexId v : image_verts)
        if (!cert.vertex_map.count(v))
            fail("map", "image vertex " + std::to_string(v) + " unmapped");
    if (!report.violations.empty()) return report;
    std::set<VertexId> hit;
    for (const auto& [u, fu] : cert.vertex_map) hit.insert(fu);
    for (VertexId v : t.graph.vertices())
        if (!hit.count(v)) fail("map", "f is not surjective: T-vertex " + std::to_string(v));

    // (1) taxa fixed
    for (const auto& name : t.taxa) {
        auto nv = n.graph.vertex_with_label(name);
        auto tv = t.graph.vertex_with_label(name);
        if (!nv || !tv) {
            fail("1", "taxon " + name + " missing");
            continue;
        }
        auto it = cert.vertex_map.find(*nv);
        if (it == cert.vertex_map.end() || it->second != *tv)
            fail("1", "taxon " + name + " not fixed by f");
    }

    // (2) each fiber induces a connected subtree of N'
    std::map<VertexId, std::vector<VertexId>> fibers;
    for (const auto& [u, fu] : cert.vertex_map) fibers[fu].push_back(u);
    for (const auto& [tv, fiber] : fibers) {
        std::set<VertexId> want(fiber.begin(), fiber.end());
        std::set<VertexId> seen{fiber.front()};
        std::vector<VertexId> stack{fiber.front()};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : image.neighbors(v))
                if (want.count(w) && seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != want.size())
            fail("2", "fiber of T-vertex " + std::to_string(tv) + " is disconnected");
    }

    // (3) every T-edge has exactly one image edge; crossing edges map to T-edges
    std::map<Edge, int> crossing;
    for (const Edge& e : image.edges()) {
        VertexId fu = cert.vertex_map.at(e.first), fv = cert.vertex_map.at(e.second);
        if (fu == fv) continue;  // inside a fiber
        Edge te = make_edge(fu, fv);
        if (!t.graph.has_edge(te.first, te.second)) {
            fail("3", "image edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                          "} maps to a non-edge of T");
            continue;
        }
        ++crossing[te];
    }
    for (const Edge& te : t.graph.edges()) {
        int c = crossing.count(te) ? crossing.at(te) : 0;
        if (c != 1)
            fail("3", "T-edge {" + std::to_string(te.first) + "," + std::to_string(te.second) +
                          "} has " + std::to_string(c) + " image edges");
    }
    return report;
}

std::string write_certificate(const EmbeddingCertificate& cert) {
    std::string out;
    for (const Edge& e : cert.image_edges)
        out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    for (const auto& [u, v] : cert.vertex_map)
        out += "f: " + std::to_string(u) + "->" + std::to_string(v) + "\n";
    return out;
}

EmbeddingCertificate read_certificate(const std::string& text) {
    EmbeddingCertificate cert;
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first.empty()) continue;
        if (first == "f:") {
            std::string rest;
            ls >> rest;
            auto arrow = rest.find("->");
            if (arrow == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'f: u->v'", 0);
            cert.vertex_map[std::stoi(rest.substr(0, arrow))] =
                std::stoi(rest.substr(arrow + 2));
        } else {
            int u = std::stoi(first), v;
            if (!(ls >> v))
                throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'", 0);
            cert.image_edges.push_back(make_edge(u, v));
        }
    }
    std::sort(cert.image_edges.begin(), cert.image_edges.end());
    return cert;
}

// ---- quartets ---------------------------------------------------------------

Quartet Quartet::make(std::string a, std::string b, std::string c, std::string d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a > c) {
        std::swap(a, c);
        std::swap(b, d);
    }
    return Quartet{{std::move(a), std::move(b), std::move(c), std::move(d)}};
}

std::string Quartet::str() const {
    return taxa[0] + " " + taxa[1] + " | " + taxa[2] + " " + taxa[3];
}

namespace {

// path between two vertices of a tree, as a vertex set
std::set<VertexId> tree_path(const LabeledGraph& g, VertexId from, VertexId to) {
    std::map<VertexId, VertexId> parent;
    std::vector<VertexId> queue{from};
    parent[from] = from;
    for (std::size_t i = 0; i < queue.size() && !parent.count(to); ++i) {
        VertexId v = queue[i];
        for (VertexId w : g.neighbors(v))
            if (!parent.count(w)) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    std::set<VertexId> path;
    for (VertexId v = to;; v = parent.at(v)) {
        path.insert(v);
        if (v == from) break;
    }
    return path;
}

bool disjoint(const std::set<VertexId>& a, const std::set<VertexId>& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else
            return false;
    }
    return true;
}

}  // namespace

std::set<Quartet> quartet_set(const PhyloTree& t) {
    const auto& X = t.taxa;
    if (X.size() < 4) throw TooFewTaxa("quartet_set needs at least 4 taxa");

    std::map<std::pair<int, int>, std::set<VertexId>> paths;
    std::vector<VertexId> leaf(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) leaf[i] = *t.graph.vertex_with_label(X[i]);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            paths[{static_cast<int>(i), static_cast<int>(j)}] =
                tree_path(t.graph, leaf[i], leaf[j]);
    auto path = [&](int i, int j) -> const std::set<VertexId>& {
        return paths.at({std::min(i, j), std::max(i, j)});
    };

    std::set<Quartet> out;
    const int k = static_cast<int>(X.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d) {
                    if (disjoint(path(a, b), path(c, d)))
                        out.insert(Quartet::make(X[a], X[b], X[c], X[d]));
                    else if (disjoint(path(a, c), path(b, d)))
                        out.insert(Quartet::make(X[a], X[c], X[b], X[d]));
                    else if (disjoint(path(a, d), path(b, c)))
                        out.insert(Quartet::make(X[a], X[d], X[b], X[c]));
                    else
                        throw Error("no quartet topology: tree is not binary");
                }
    return out;
}

// ---- restriction -----------------------------------------------------------

SteinerRestriction restrict_tracked(const LabeledGraph& tree,
                                    const std::vector<std::string>& taxa) {
    if (!tree.is_tree()) throw Error("restrict_and_suppress: input is not a tree");
    for (const auto& name : taxa)
        if (!tree.vertex_with_label(name)) throw TaxonMissing("taxon " + name + " missing");

    LabeledGraph g = tree;
    std::set<std::string> keep(taxa.begin(), taxa.end());
    for (const auto& [v, name] : tree.labels())
        if (!keep.count(name)) g.clear_label(v);

    // prune unlabeled leaves
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : g.vertices())
            if (g.degree(v) <= 1 && !g.label(v) && g.num_vertices() > 1) {
                g.remove_vertex(v);
                changed = true;
            }
    }
    SteinerRestriction r;
    r.steiner = g;

    // suppress unlabeled degree-2 vertices, keeping labels
    changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : g.vertices()) {
            if (g.label(v) || g.degree(v) != 2) continue;
            auto nbrs = g.neighbors(v);
            if (nbrs.size() != 2) continue;
            g.remove_vertex(v);
            g.add_edge(nbrs[0], nbrs[1]);
            changed = true;
        }
    }
    r.suppressed = make_phylo_tree(std::move(g));
    return r;
}

PhyloTree restrict_and_suppress(const LabeledGraph& spanning_tree,
                                const std::vector<std::string>& taxa) {
    return restrict_tracked(spanning_tree, taxa).suppressed;
}

// ---- labeled isomorphism ----------------------------------------------------

namespace {

std::string encode(const LabeledGraph& g, VertexId v, VertexId parent,
                   std::vector<std::pair<std::string, VertexId>>* children_out = nullptr) {
    if (auto name = g.label(v)) return "'" + *name + "'";
    std::vector<std::pair<std::string, VertexId>> parts;
    for (VertexId w : g.neighbors(v))
        if (w != parent) parts.push_back({encode(g, w, v), w});
    std::sort(parts.begin(), parts.end());
    if (children_out) *children_out = parts;
    std::string out = "(";
    for (const auto& [s, w] : parts) out += s + ",";
    return out + ")";
}

void build_mapping(const LabeledGraph& g1, VertexId v1, VertexId p1, const LabeledGraph& g2,
                   VertexId v2, VertexId p2, std::map<VertexId, VertexId>& out) {
    out[v1] = v2;
    if (g1.label(v1)) return;
    std::vector<std::pair<std::string, VertexId>> c1, c2;
    encode(g1, v1, p1, &c1);
    encode(g2, v2, p2, &c2);
    // sibling encodings are pairwise distinct (taxa are disjoint across subtrees)
    for (std::size_t i = 0; i < c1.size(); ++i)
        build_mapping(g1, c1[i].second, v1, g2, c2[i].second, v2, out);
}

}  // namespace

std::optional<std::map<VertexId, VertexId>> labeled_tree_isomorphism(const PhyloTree& t1,
                                                                     const PhyloTree& t2) {
    if (t1.taxa != t2.taxa) throw TaxonMismatch("taxon sets differ");
    VertexId l1 = *t1.graph.vertex_with_label(t1.taxa.front());
    VertexId l2 = *t2.graph.vertex_with_label(t2.taxa.front());
    std::map<VertexId, VertexId> out;
    if (t1.graph.num_vertices() == 1) {
        if (t2.graph.num_vertices() != 1) return std::nullopt;
        out[l1] = l2;
        return out;
    }
    if (t2.graph.num_vertices() == 1) return std::nullopt;
    VertexId r1 = t1.graph.neighbors(l1).front();
    VertexId r2 = t2.graph.neighbors(l2).front();
    if (encode(t1.graph, r1, l1) != encode(t2.graph, r2, l2)) return std::nullopt;
    out[l1] = l2;
    build_mapping(t1.graph, r1, l1, t2.graph, r2, l2, out);
    return out;
}

bool labeled_tree_isomorphic(const PhyloTree& t1, const PhyloTree& t2) {
    return labeled_tree_isomorphism(t1, t2).has_value();
}

// ---- display search ----------------------------------------------------------

namespace {

// shortest cycle, as an edge list (deterministic: minimizes (length, edge list))
std::vector<Edge> shortest_cycle(const LabeledGraph& g) {
    std::vector<Edge> best;
    std::set<Edge> tried;
    for (const Edge& e : g.edges()) {
        if (!tried.insert(e).second) continue;
        if (g.edge_multiplicity(e.first, e.second) > 1) return {e, e};
        // shortest u-v path avoiding e
        std::map<VertexId, VertexId> parent;
        std::vector<VertexId> queue{e.first};
        parent[e.first] = e.first;
        for (std::size_t i = 0; i < queue.size() && !parent.count(e.second); ++i) {
            VertexId v = queue[i];
            for (VertexId w : g.neighbors(v)) {
                if (v == e.first && w == e.second) continue;
                if (!parent.count(w)) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (!parent.count(e.second)) continue;
        std::vector<Edge> cycle{e};
        for (VertexId v = e.second; v != e.first; v = parent.at(v))
            cycle.push_back(make_edge(v, parent.at(v)));
        std::sort(cycle.begin() + 1, cycle.end());
        if (best.empty() || cycle.size() < best.size()) best = cycle;
    }
    return best;
}

EmbeddingCertificate build_certificate(const SteinerRestriction& r,
                                       const std::map<VertexId, VertexId>& iso) {
    EmbeddingCertificate cert;
    cert.image_edges = r.steiner.edges();
    std::sort(cert.image_edges.begin(), cert.image_edges.end());

    std::set<VertexId> kept;
    for (VertexId v : r.suppressed.graph.vertices()) {
        kept.insert(v);
        cert.vertex_map[v] = iso.at(v);
    }
    // degree-2 path vertices map to the nearer kept endpoint, ties to the
    // endpoint with the smaller vertex id
    for (VertexId p : r.steiner.vertices()) {
        if (kept.count(p)) continue;
        auto nbrs = r.steiner.neighbors(p);
        std::vector<std::pair<int, VertexId>> ends;  // (distance, endpoint)
        for (VertexId start : nbrs) {
            int dist = 1;
            VertexId prev = p, cur = start;
            while (!kept.count(cur)) {
                auto nn = r.steiner.neighbors(cur);
                VertexId next = nn[0] == prev ? nn[1] : nn[0];
                prev = cur;
                cur = next;
                ++dist;
            }
            ends.push_back({dist, cur});
        }
        VertexId endpoint;
        if (ends[0].first != ends[1].first)
            endpoint = ends[0].first < ends[1].first ? ends[0].second : ends[1].second;
        else
            endpoint = std::min(ends[0].second, ends[1].second);
        cert.vertex_map[p] = iso.at(endpoint);
    }
    return cert;
}

}  // namespace

EmbeddingCertificate certificate_from_subtree(const LabeledGraph& subtree, const PhyloTree& t) {
    SteinerRestriction r = restrict_tracked(subtree, t.taxa);
    auto iso = labeled_tree_isomorphism(r.suppressed, t);
    if (!iso) throw InvalidCertificate("subtree restriction is not isomorphic to T");
    return build_certificate(r, *iso);
}

std::optional<EmbeddingCertificate> find_display(const PhyloNetwork& n, const PhyloTree& t,
                                                 const SearchLimits& limits) {
    if (n.taxa != t.taxa) throw TaxonMismatch("taxon sets differ");
    if (n.taxa.size() < 3) throw Error("find_display requires at least 3 taxa");

    std::uint64_t nodes = 0;
    std::set<std::vector<Edge>> visited;

    std::function<std::optional<EmbeddingCertificate>(LabeledGraph&, std::vector<Edge>&)> rec =
        [&](LabeledGraph& g, std::vector<Edge>& deleted) -> std::optional<EmbeddingCertificate> {
        if (++nodes > limits.max_nodes)
            throw LimitExceeded("find_display exceeded node budget", nodes);
        if (g.num_edges() + 1 == g.num_vertices()) {  // spanning tree reached
            SteinerRestriction r = restrict_tracked(g, t.taxa);
            if (auto iso = labeled_tree_isomorphism(r.suppressed, t))
                return build_certificate(r, *iso);
            return std::nullopt;
        }
        auto cycle = shortest_cycle(g);
        for (const Edge& e : cycle) {
            g.remove_edge(e.first, e.second);
            if (g.is_connected()) {
                std::vector<Edge> key = deleted;
                key.insert(std::lower_bound(key.begin(), key.end(), e), e);
                if (visited.insert(key).second) {
                    if (auto found = rec(g, key)) {
                        g.add_edge(e.first, e.second);
                        return found;
                    }
                }
            }
            g.add_edge(e.first, e.second);
        }
        return std::nullopt;
    };

    LabeledGraph g = n.graph;
    std::vector<Edge> deleted;
    return rec(g, deleted);
}

bool displays_via_quartets(const PhyloNetwork& n, const PhyloTree& t,
                           const SearchLimits& limits) {
    if (n.taxa != t.taxa) throw TaxonMismatch("taxon sets differ");
    if (n.taxa.size() < 4) throw TooFewTaxa("displays_via_quartets needs at least 4 taxa");

    const auto target = quartet_set(t);
    const int r = reticulation_number(n);
    std::vector<Edge> all = n.graph.edges();
    const int m = static_cast<int>(all.size());
    std::uint64_t nodes = 0;

    std::vector<int> pick(r);
    std::function<bool(int, int, LabeledGraph&)> rec = [&](int idx, int start,
                                                           LabeledGraph& g) -> bool {
        if (idx == r) {
            if (++nodes > limits.max_nodes)
                throw LimitExceeded("displays_via_quartets exceeded node budget", nodes);
            if (!g.is_connected()) return false;
            // |E| = |V| - 1 and connected: a spanning tree
            PhyloTree restricted = restrict_and_suppress(g, t.taxa);
            return quartet_set(restricted) == target;
        }
        for (int i = start; i < m; ++i) {
            pick[idx] = i;
            g.remove_edge(all[i].first, all[i].second);
            bool found = rec(idx + 1, i + 1, g);
            g.add_edge(all[i].first, all[i].second);
            if (found) return true;
        }
        return false;
    };

    LabeledGraph g = n.graph;
    return rec(0, 0, g);
}

}  // namespace phylo
