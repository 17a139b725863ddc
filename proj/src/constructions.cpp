#include "phylo/constructions.hpp"

#include <algorithm>
#include <set>

namespace phylo {

namespace {

void check_params(const GridParams& p) {
    if (p.r < 2 || p.r % 2 != 0) throw InvalidParams("grid: r must be a positive even integer");
    if (p.n <= 2 * p.r + 2) throw InvalidParams("grid: n must exceed 2r + 2");
}

std::string nm(char c, int i, int j) {
    return std::string(1, c) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

struct NetBuild {
    LabeledGraph g;
    std::map<std::string, VertexId> id;       // all raw names, including dead ones
    std::map<Edge, std::vector<Edge>> prov;   // surviving edge -> raw edges merged into it
};

// merge the unlabeled degree-2 vertex v away, tracking edge provenance
void suppress_tracked(NetBuild& b, VertexId v) {
    auto nb = b.g.neighbors(v);
    if (b.g.degree(v) != 2 || nb.size() != 2) throw Error("grid: unexpected degree");
    Edge e1 = make_edge(nb[0], v), e2 = make_edge(v, nb[1]), e = make_edge(nb[0], nb[1]);
    if (b.g.has_edge(e.first, e.second)) throw Error("grid: suppression made a parallel edge");
    std::vector<Edge> merged = b.prov.at(e1);
    const auto& rest = b.prov.at(e2);
    merged.insert(merged.end(), rest.begin(), rest.end());
    b.prov.erase(e1);
    b.prov.erase(e2);
    b.g.remove_vertex(v);
    b.g.add_edge(e.first, e.second);
    b.prov[e] = std::move(merged);
}

NetBuild build_network(const GridParams& p) {
    check_params(p);
    NetBuild b;
    auto add = [&](char c, int i, int j) { b.id[nm(c, i, j)] = b.g.add_vertex(); };
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) add('x', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) add('y', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 0; j <= p.n; ++j) add('u', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 0; j <= p.n; ++j) add('v', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) b.g.set_label(b.id.at(nm('x', i, j)), nm('x', i, j));

    auto link = [&](const std::string& a, const std::string& c) {
        Edge e = make_edge(b.id.at(a), b.id.at(c));
        b.g.add_edge(e.first, e.second);
        b.prov[e] = {e};
    };
    for (int i = 1; i <= p.r; ++i) {
        for (int j = 1; j <= p.n; ++j) link(nm('y', i, j), nm('x', i, j));
        for (int j = 0; j <= p.n; ++j) link(nm('u', i, j), nm('v', i, j));
        for (int j = 1; j <= p.n; ++j) {
            link(nm('v', i, j - 1), nm('y', i, j));
            link(nm('y', i, j), nm('u', i, j));
        }
    }
    for (int i = 1; i < p.r; ++i)
        for (int j = 0; j <= p.n; ++j) link(nm('v', i, j), nm('u', i + 1, j));

    // drop the two unlabeled degree-1 corners, then suppress degree-2 vertices
    for (const std::string& name : {nm('u', 1, 0), nm('v', p.r, p.n)}) {
        VertexId v = b.id.at(name);
        for (VertexId w : b.g.neighbors(v)) b.prov.erase(make_edge(v, w));
        b.g.remove_vertex(v);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : b.g.vertices()) {
            if (!b.g.has_vertex(v) || b.g.label(v) || b.g.degree(v) != 2) continue;
            suppress_tracked(b, v);
            changed = true;
        }
    }
    return b;
}

struct TreeBuild {
    LabeledGraph g;
    std::map<std::string, VertexId> id;
};

TreeBuild build_tree(const GridParams& p) {
    check_params(p);
    TreeBuild b;
    auto add = [&](char c, int i, int j) { b.id[nm(c, i, j)] = b.g.add_vertex(); };
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) add('z', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) add('x', i, j);
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) b.g.set_label(b.id.at(nm('x', i, j)), nm('x', i, j));

    auto link = [&](const std::string& a, const std::string& c) {
        b.g.add_edge(b.id.at(a), b.id.at(c));
    };
    for (int i = 1; i <= p.r; ++i) {
        for (int j = 1; j <= p.n; ++j) link(nm('z', i, j), nm('x', i, j));
        for (int j = 1; j < p.n; ++j) link(nm('z', i, j), nm('z', i, j + 1));
    }
    for (int i = 1; i < p.r; ++i)
        link(nm('z', i, i % 2 == 1 ? p.n : 1), nm('z', i + 1, i % 2 == 1 ? p.n : 1));

    // the two corner z's end up with degree 2; splice them out
    for (const std::string& name : {nm('z', 1, 1), nm('z', p.r, 1)}) {
        VertexId v = b.id.at(name);
        auto nb = b.g.neighbors(v);
        if (nb.size() != 2) throw Error("grid: corner z is not degree 2");
        b.g.remove_vertex(v);
        b.g.add_edge(nb[0], nb[1]);
    }
    return b;
}

std::map<std::string, VertexId> live_names(const LabeledGraph& g,
                                           const std::map<std::string, VertexId>& id) {
    std::map<std::string, VertexId> out;
    for (const auto& [name, v] : id)
        if (g.has_vertex(v)) out[name] = v;
    return out;
}

}  // namespace

PhyloNetwork grid_network(const GridParams& p) { return make_phylo_network(build_network(p).g); }

PhyloTree grid_tree(const GridParams& p) { return make_phylo_tree(build_tree(p).g); }

std::map<std::string, VertexId> grid_network_names(const GridParams& p) {
    NetBuild b = build_network(p);
    return live_names(b.g, b.id);
}

std::map<std::string, VertexId> grid_tree_names(const GridParams& p) {
    TreeBuild b = build_tree(p);
    return live_names(b.g, b.id);
}

EmbeddingCertificate grid_embedding(const GridParams& p) {
    NetBuild b = build_network(p);

    // raw vertical edges {v_i_j, u_(i+1)_j} cut by the embedding: all interior
    // columns, plus column 0 for odd i and column n for even i (the kept ones
    // are exactly the caterpillar's row links)
    std::set<Edge> cut;
    for (int i = 1; i < p.r; ++i)
        for (int j = 0; j <= p.n; ++j) {
            bool del = (j >= 1 && j < p.n) || (j == 0 && i % 2 == 1) || (j == p.n && i % 2 == 0);
            if (del)
                cut.insert(make_edge(b.id.at(nm('v', i, j)), b.id.at(nm('u', i + 1, j))));
        }

    LabeledGraph image;
    for (const auto& [e, raws] : b.prov) {
        bool keep = std::none_of(raws.begin(), raws.end(),
                                 [&](const Edge& raw) { return cut.count(raw) > 0; });
        if (!keep) continue;
        for (VertexId v : {e.first, e.second})
            if (!image.has_vertex(v)) {
                image.add_vertex(v);
                if (auto name = b.g.label(v)) image.set_label(v, *name);
            }
        image.add_edge(e.first, e.second);
    }
    return certificate_from_subtree(image, grid_tree(p));
}

TreeDecomposition grid_path_decomposition(const GridParams& p) {
    NetBuild b = build_network(p);
    auto vid = [&](char c, int i, int j) {
        VertexId v = b.id.at(nm(c, i, j));
        if (!b.g.has_vertex(v)) throw Error("grid: bag references a dead vertex " + nm(c, i, j));
        return v;
    };

    std::vector<std::set<VertexId>> bags;
    std::set<VertexId> cur;
    cur.insert(vid('y', 1, 1));
    for (int i = 2; i < p.r; ++i) cur.insert(vid('v', i, 0));
    cur.insert(vid('y', p.r, 1));
    bags.push_back(cur);
    auto step = [&](char ca, int ia, int ja, char cd, int id_, int jd) {
        cur.insert(vid(ca, ia, ja));
        bags.push_back(cur);
        cur.erase(vid(cd, id_, jd));
        bags.push_back(cur);
    };

    // sweep the first column
    step('v', 1, 1, 'y', 1, 1);
    for (int i = 2; i < p.r; ++i) {
        step('y', i, 1, 'v', i, 0);
        step('u', i, 1, 'y', i, 1);
        step('v', i, 1, 'u', i, 1);
    }
    step('u', p.r, 1, 'y', p.r, 1);
    // advance the window column by column
    for (int j = 1; j <= p.n - 2; ++j) {
        step('y', 1, j + 1, 'v', 1, j);
        step('v', 1, j + 1, 'y', 1, j + 1);
        for (int i = 2; i < p.r; ++i) {
            step('y', i, j + 1, 'v', i, j);
            step('u', i, j + 1, 'y', i, j + 1);
            step('v', i, j + 1, 'u', i, j + 1);
        }
        step('y', p.r, j + 1, 'u', p.r, j);
        step('u', p.r, j + 1, 'y', p.r, j + 1);
    }
    // close out the last column
    step('y', 1, p.n, 'v', 1, p.n - 1);
    for (int i = 2; i < p.r; ++i) {
        step('y', i, p.n, 'v', i, p.n - 1);
        step('u', i, p.n, 'y', i, p.n);
    }
    step('y', p.r, p.n, 'u', p.r, p.n - 1);

    TreeDecomposition td;
    for (const auto& bag : bags) td.bags.emplace_back(bag.begin(), bag.end());
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.tree.push_back({i, i + 1});

    // hang the {x,y} leaf bags off the first bag holding the matching y
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j <= p.n; ++j) {
            VertexId y = vid('y', i, j), x = vid('x', i, j);
            int host = -1;
            for (int k = 0; k < static_cast<int>(bags.size()); ++k)
                if (bags[k].count(y)) {
                    host = k;
                    break;
                }
            if (host < 0) throw Error("grid: no bag contains " + nm('y', i, j));
            td.tree.push_back({host, static_cast<int>(td.bags.size())});
            td.bags.push_back({std::min(x, y), std::max(x, y)});
        }
    return td;
}

GridDisplay grid_display(const GridParams& p) {
    GridDisplay d;
    d.raw = build_display_graph(grid_network(p), grid_tree(p));
    d.suppressed = suppress(d.raw.graph);
    for (const auto& [name, v] : grid_network_names(p))
        if (name[0] != 'x') d.names[name] = d.raw.first_to_display.at(v);
    for (const auto& [name, v] : grid_tree_names(p))
        if (name[0] == 'z') d.names[name] = d.raw.second_to_display.at(v);
    return d;
}

Bramble grid_bramble(const GridParams& p) {
    GridDisplay d = grid_display(p);
    Bramble b;
    auto add_element = [&](const std::vector<std::string>& names) {
        std::set<VertexId> s;
        for (const auto& name : names) {
            auto it = d.names.find(name);
            if (it != d.names.end()) s.insert(it->second);  // dead names are ignored
        }
        b.elements.emplace_back(s.begin(), s.end());
    };
    auto column = [&](int j, std::vector<std::string>& names) {
        for (int h = 1; h <= p.r; ++h)
            for (char c : {'y', 'u', 'v'}) names.push_back(nm(c, h, j));
    };

    for (int i = 1; i < p.r; ++i)
        for (int j = 1; j < p.n; ++j) {
            std::vector<std::string> names;
            for (int l = 0; l < p.n; ++l)
                for (char c : {'u', 'v', 'y'}) names.push_back(nm(c, i, l));
            column(j, names);
            add_element(names);
        }
    for (int i = 1; i <= p.r; ++i)
        for (int j = 1; j < p.n; ++j) {
            std::vector<std::string> names;
            for (int l = 1; l <= p.n; ++l) names.push_back(nm('z', i, l));
            column(j, names);
            add_element(names);
        }
    {
        std::vector<std::string> names;
        for (int h = 1; h <= p.r; ++h) {
            names.push_back(nm('y', h, p.n));
            names.push_back(nm('u', h, p.n));
        }
        add_element(names);
    }
    {
        std::vector<std::string> names;
        for (int l = 1; l < p.n; ++l) {
            names.push_back(nm('y', p.r, l));
            names.push_back(nm('u', p.r, l));
        }
        add_element(names);
    }
    return b;
}

}  // namespace phylo
