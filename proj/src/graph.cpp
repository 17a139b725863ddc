#include "phylo/graph.hpp"

#include <algorithm>
#include <functional>

namespace phylo {

VertexId LabeledGraph::add_vertex() {
    while (adj_.count(next_id_)) ++next_id_;
    VertexId v = next_id_++;
    adj_[v];
    return v;
}

void LabeledGraph::add_vertex(VertexId v) {
    if (v < 0) throw Error("vertex ids must be non-negative");
    adj_[v];
}

void LabeledGraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw Error("self-loops are not allowed");
    if (!has_vertex(u) || !has_vertex(v)) throw Error("add_edge: unknown vertex");
    ++adj_[u][v];
    ++adj_[v][u];
    ++num_edges_;
}

void LabeledGraph::remove_edge(VertexId u, VertexId v) {
    auto it = adj_.find(u);
    if (it == adj_.end()) throw Error("remove_edge: unknown vertex");
    auto jt = it->second.find(v);
    if (jt == it->second.end()) throw Error("remove_edge: no such edge");
    if (--jt->second == 0) it->second.erase(jt);
    auto& back = adj_.at(v);
    if (--back.at(u) == 0) back.erase(u);
    --num_edges_;
}

void LabeledGraph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("remove_vertex: unknown vertex");
    for (const auto& [w, mult] : it->second) {
        adj_.at(w).erase(v);
        num_edges_ -= mult;
    }
    adj_.erase(it);
    clear_label(v);
}

void LabeledGraph::set_label(VertexId v, const std::string& taxon) {
    if (!has_vertex(v)) throw Error("set_label: unknown vertex");
    auto it = by_label_.find(taxon);
    if (it != by_label_.end() && it->second != v)
        throw DuplicateTaxon("duplicate taxon label: " + taxon);
    clear_label(v);
    labels_[v] = taxon;
    by_label_[taxon] = v;
}

void LabeledGraph::clear_label(VertexId v) {
    auto it = labels_.find(v);
    if (it == labels_.end()) return;
    by_label_.erase(it->second);
    labels_.erase(it);
}

void LabeledGraph::clear_labels() {
    labels_.clear();
    by_label_.clear();
}

int LabeledGraph::edge_multiplicity(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return 0;
    auto jt = it->second.find(v);
    return jt == it->second.end() ? 0 : jt->second;
}

const std::map<VertexId, int>& LabeledGraph::row(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("unknown vertex " + std::to_string(v));
    return it->second;
}

int LabeledGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& [w, mult] : row(v)) d += mult;
    return d;
}

std::vector<VertexId> LabeledGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (const auto& [v, nbrs] : adj_)
        for (const auto& [w, mult] : nbrs)
            if (v < w)
                for (int i = 0; i < mult; ++i) out.push_back({v, w});
    return out;
}

std::vector<VertexId> LabeledGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& [w, mult] : row(v)) out.push_back(w);
    return out;
}

std::optional<std::string> LabeledGraph::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::optional<VertexId> LabeledGraph::vertex_with_label(const std::string& taxon) const {
    auto it = by_label_.find(taxon);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

bool LabeledGraph::is_simple() const {
    for (const auto& [v, nbrs] : adj_)
        for (const auto& [w, mult] : nbrs)
            if (mult > 1) return false;
    return true;
}

bool LabeledGraph::is_connected() const {
    if (adj_.empty()) return true;
    std::set<VertexId> seen;
    std::vector<VertexId> stack{adj_.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& [w, mult] : adj_.at(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == adj_.size();
}

bool LabeledGraph::is_tree() const {
    return is_connected() && num_edges_ + 1 == num_vertices();
}

LabeledGraph suppress(const LabeledGraph& g) {
    LabeledGraph out = g;
    out.clear_labels();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : out.vertices()) {
            if (out.degree(v) != 2) continue;
            auto nbrs = out.neighbors(v);
            if (nbrs.size() != 2) continue;  // both edges to the same neighbor
            VertexId u = nbrs[0], w = nbrs[1];
            out.remove_vertex(v);
            out.add_edge(u, w);
            changed = true;
        }
    }
    return out;
}

std::vector<std::vector<Edge>> biconnected_components(const LabeledGraph& g) {
    if (!g.is_connected()) throw Disconnected("biconnected_components: graph is disconnected");

    // Edge instances, parallel copies distinct.
    std::vector<Edge> edge_list = g.edges();
    std::map<VertexId, std::vector<int>> incident;
    for (int i = 0; i < static_cast<int>(edge_list.size()); ++i) {
        incident[edge_list[i].first].push_back(i);
        incident[edge_list[i].second].push_back(i);
    }

    std::map<VertexId, int> disc, low;
    std::vector<int> edge_stack;
    std::vector<std::vector<Edge>> components;
    int timer = 0;

    std::function<void(VertexId, int)> dfs = [&](VertexId u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        for (int ei : incident[u]) {
            if (ei == parent_edge) continue;
            const Edge& e = edge_list[ei];
            VertexId w = e.first == u ? e.second : e.first;
            auto it = disc.find(w);
            if (it == disc.end()) {
                edge_stack.push_back(ei);
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Edge> comp;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(edge_list[top]);
                        if (top == ei) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            } else if (it->second < disc[u]) {
                edge_stack.push_back(ei);
                low[u] = std::min(low[u], it->second);
            }
        }
    };

    auto verts = g.vertices();
    if (!verts.empty()) dfs(verts.front(), -1);
    std::sort(components.begin(), components.end());
    return components;
}

namespace {

// degree + sorted neighbor-degree signature, a cheap refinement invariant
std::map<VertexId, std::string> degree_signatures(const LabeledGraph& g) {
    std::map<VertexId, std::string> sig;
    for (VertexId v : g.vertices()) {
        std::vector<int> nd;
        for (VertexId w : g.neighbors(v))
            for (int i = 0; i < g.edge_multiplicity(v, w); ++i) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        std::string s = std::to_string(g.degree(v)) + ":";
        for (int d : nd) s += std::to_string(d) + ",";
        sig[v] = s;
    }
    return sig;
}

}  // namespace

bool graphs_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;

    auto sig_a = degree_signatures(a);
    auto sig_b = degree_signatures(b);
    {
        std::vector<std::string> sa, sb;
        for (auto& [v, s] : sig_a) sa.push_back(s);
        for (auto& [v, s] : sig_b) sb.push_back(s);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<VertexId> order = a.vertices();
    // place high-degree vertices first, keep connectivity where possible
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId x, VertexId y) { return a.degree(x) > a.degree(y); });

    std::map<VertexId, VertexId> fwd;
    std::set<VertexId> used;

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        VertexId v = order[k];
        for (VertexId w : b.vertices()) {
            if (used.count(w) || sig_a[v] != sig_b[w]) continue;
            bool ok = true;
            for (const auto& [x, fx] : fwd) {
                if (a.edge_multiplicity(v, x) != b.edge_multiplicity(w, fx)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            fwd[v] = w;
            used.insert(w);
            if (rec(k + 1)) return true;
            fwd.erase(v);
            used.erase(w);
        }
        return false;
    };
    return rec(0);
}

std::string canonical_form(const LabeledGraph& g) {
    std::vector<VertexId> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    std::string best;  // empty means "none yet"
    std::vector<VertexId> perm;
    std::vector<bool> used(n, false);
    std::string code;

    std::function<void(int, bool)> rec = [&](int k, bool tied) {
        if (k == n) {
            if (best.empty() || code < best) best = code;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            std::string row;
            row.reserve(k);
            for (int j = 0; j < k; ++j)
                row.push_back(static_cast<char>('0' + g.edge_multiplicity(verts[i], perm[j])));
            std::string next = code + row;
            bool next_tied = tied;
            if (tied && !best.empty()) {
                int cmp = next.compare(best.substr(0, next.size()));
                if (cmp > 0) continue;
                if (cmp < 0) next_tied = false;
            }
            used[i] = true;
            perm.push_back(verts[i]);
            std::swap(code, next);
            rec(k + 1, next_tied);
            std::swap(code, next);
            perm.pop_back();
            used[i] = false;
        }
    };
    rec(0, true);
    return std::to_string(n) + "|" + best;
}

}  // namespace phylo
