#include "phylo/io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace phylo {

// ---- Newick ---------------------------------------------------------------

namespace {

struct NewickParser {
    const std::string& text;
    std::size_t pos = 0;
    LabeledGraph g;

    explicit NewickParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    std::string read_name() {
        skip_ws();
        std::string name;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
                std::isspace(static_cast<unsigned char>(c)))
                break;
            name.push_back(c);
            ++pos;
        }
        return name;
    }

    void skip_branch_length() {
        skip_ws();
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                    text[pos] == '-' || text[pos] == '+' || text[pos] == 'e' || text[pos] == 'E'))
                ++pos;
            if (pos == start) throw ParseError("expected branch length after ':'", pos);
        }
    }

    VertexId subtree() {
        if (peek() == '(') {
            ++pos;
            VertexId v = g.add_vertex();
            g.add_edge(v, subtree());
            while (peek() == ',') {
                ++pos;
                g.add_edge(v, subtree());
            }
            expect(')');
            read_name();  // internal labels / support values are discarded
            skip_branch_length();
            return v;
        }
        std::string name = read_name();
        if (name.empty()) throw ParseError("expected taxon name", pos);
        VertexId v = g.add_vertex();
        g.set_label(v, name);
        skip_branch_length();
        return v;
    }
};

}  // namespace

PhyloTree parse_newick(const std::string& text) {
    NewickParser p(text);
    VertexId root = p.subtree();
    p.expect(';');
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing content after ';'", p.pos);

    LabeledGraph g = std::move(p.g);
    if (g.degree(root) == 2 && !g.label(root)) {
        auto nbrs = g.neighbors(root);
        g.remove_vertex(root);
        if (nbrs.size() == 2) g.add_edge(nbrs[0], nbrs[1]);
    }
    return make_phylo_tree(std::move(g));
}

namespace {

std::string newick_subtree(const LabeledGraph& g, VertexId v, VertexId parent) {
    if (auto name = g.label(v)) return *name;
    std::vector<std::string> parts;
    for (VertexId w : g.neighbors(v))
        if (w != parent) parts.push_back(newick_subtree(g, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out + ")";
}

}  // namespace

std::string write_newick(const PhyloTree& t) {
    const LabeledGraph& g = t.graph;
    if (g.num_vertices() == 1) return t.taxa.front() + ";";
    VertexId leaf = *g.vertex_with_label(t.taxa.front());
    VertexId root = g.neighbors(leaf).front();
    if (auto name = g.label(root))  // two-taxon tree: a single edge
        return "(" + t.taxa.front() + "," + *name + ");";
    std::vector<std::string> parts{t.taxa.front()};
    for (VertexId w : g.neighbors(root))
        if (w != leaf) parts.push_back(newick_subtree(g, w, root));
    std::sort(parts.begin() + 1, parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out + ");";
}

// ---- labeled edge list ----------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

long parse_long(const std::string& tok, int lineno) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'",
                         0);
    }
}

}  // namespace

LabeledGraph read_edgelist(const std::string& text) {
    LabeledGraph g;
    std::map<std::string, VertexId> names;
    auto vertex_of = [&](const std::string& name) {
        auto it = names.find(name);
        if (it != names.end()) return it->second;
        VertexId v = g.add_vertex();
        names.emplace(name, v);
        return v;
    };

    enum { None, Taxa, Edges } section = None;
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '%') continue;
        if (toks[0] == "#taxa") {
            section = Taxa;
            continue;
        }
        if (toks[0] == "#edges") {
            section = Edges;
            continue;
        }
        if (section == Taxa) {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) +
                                     ": expected '<vertex> <taxon>'",
                                 0);
            g.set_label(vertex_of(toks[0]), toks[1]);
        } else if (section == Edges) {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected '<u> <v>'", 0);
            VertexId u = vertex_of(toks[0]), v = vertex_of(toks[1]);
            if (u == v)
                throw ParseError("line " + std::to_string(lineno) + ": self-loop", 0);
            g.add_edge(u, v);
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                                 ": content before #taxa/#edges section",
                             0);
        }
    }
    return g;
}

std::string write_edgelist(const LabeledGraph& g) {
    // vertex names: taxon name where labeled, v<id> otherwise
    std::map<VertexId, std::string> names;
    for (VertexId v : g.vertices()) {
        if (auto name = g.label(v))
            names[v] = *name;
        else
            names[v] = "v" + std::to_string(v);
    }
    std::string out = "#taxa\n";
    for (const auto& [v, taxon] : g.labels()) out += names[v] + " " + taxon + "\n";
    out += "#edges\n";
    for (const Edge& e : g.edges()) out += names[e.first] + " " + names[e.second] + "\n";
    return out;
}

PhyloNetwork parse_network_edgelist(const std::string& text) {
    return make_phylo_network(read_edgelist(text));
}

std::string write_network_edgelist(const PhyloNetwork& n) {
    return write_edgelist(n.graph);
}

// ---- PACE .gr / .td -------------------------------------------------------

LabeledGraph read_gr(const std::string& text) {
    LabeledGraph g;
    std::istringstream iss(text);
    std::string line;
    long n = -1, m = -1, edges_seen = 0;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n != -1 || toks.size() != 4 || toks[1] != "tw")
                throw ParseError("line " + std::to_string(lineno) + ": malformed 'p tw n m' header",
                                 0);
            n = parse_long(toks[2], lineno);
            m = parse_long(toks[3], lineno);
            for (long i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
            continue;
        }
        if (n == -1)
            throw ParseError("line " + std::to_string(lineno) + ": edge before header", 0);
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'", 0);
        long u = parse_long(toks[0], lineno), v = parse_long(toks[1], lineno);
        if (u < 1 || u > n || v < 1 || v > n)
            throw IndexError("line " + std::to_string(lineno) + ": vertex index out of range");
        g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
        ++edges_seen;
    }
    if (n == -1) throw ParseError("missing 'p tw n m' header", 0);
    if (edges_seen != m)
        throw ParseError("edge count " + std::to_string(edges_seen) + " does not match header " +
                             std::to_string(m),
                         0);
    return g;
}

std::string write_gr(const LabeledGraph& g) {
    std::map<VertexId, long> num;
    long next = 1;
    for (VertexId v : g.vertices()) num[v] = next++;
    std::string out =
        "p tw " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(num[e.first]) + " " + std::to_string(num[e.second]) + "\n";
    return out;
}

TreeDecomposition read_td(const std::string& text) {
    TreeDecomposition td;
    std::istringstream iss(text);
    std::string line;
    long bags = -1, n = -1;
    int lineno = 0;
    std::set<long> bag_ids;
    while (std::getline(iss, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (bags != -1 || toks.size() != 5 || toks[1] != "td")
                throw ParseError(
                    "line " + std::to_string(lineno) + ": malformed 's td b w n' header", 0);
            bags = parse_long(toks[2], lineno);
            n = parse_long(toks[4], lineno);
            td.bags.assign(bags, {});
            continue;
        }
        if (bags == -1)
            throw ParseError("line " + std::to_string(lineno) + ": content before header", 0);
        if (toks[0] == "b") {
            if (toks.size() < 2)
                throw ParseError("line " + std::to_string(lineno) + ": malformed bag line", 0);
            long i = parse_long(toks[1], lineno);
            if (i < 1 || i > bags)
                throw IndexError("line " + std::to_string(lineno) + ": bag index out of range");
            if (!bag_ids.insert(i).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate bag", 0);
            for (std::size_t k = 2; k < toks.size(); ++k) {
                long v = parse_long(toks[k], lineno);
                if (v < 1 || v > n)
                    throw IndexError("line " + std::to_string(lineno) +
                                     ": vertex index out of range (vertices are 1-indexed)");
                td.bags[i - 1].push_back(static_cast<VertexId>(v - 1));
            }
            std::sort(td.bags[i - 1].begin(), td.bags[i - 1].end());
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected tree edge 'i j'", 0);
        long i = parse_long(toks[0], lineno), j = parse_long(toks[1], lineno);
        if (i < 1 || i > bags || j < 1 || j > bags)
            throw IndexError("line " + std::to_string(lineno) + ": bag index out of range");
        td.tree.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1)});
    }
    if (bags == -1) throw ParseError("missing 's td' header", 0);
    return td;
}

std::string write_td(const TreeDecomposition& td, int num_graph_vertices) {
    int max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, static_cast<int>(bag.size()));
    std::string out = "s td " + std::to_string(td.bags.size()) + " " + std::to_string(max_bag) +
                      " " + std::to_string(num_graph_vertices) + "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out += "b " + std::to_string(i + 1);
        for (VertexId v : td.bags[i]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (const auto& [i, j] : td.tree)
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

}  // namespace phylo
