#include "phylo/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace phylo {

namespace {

void validate_cubic(const LabeledGraph& g) {
    if (!g.is_simple()) throw NotSimple("input has parallel edges");
    if (!g.is_connected()) throw Disconnected("input is disconnected");
    for (VertexId v : g.vertices())
        if (g.degree(v) != 3)
            throw NotCubic("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)));
}

// true iff adding v to its side closes a cycle: two already-assigned same-side
// neighbors of v that are connected through the side
bool closes_cycle(const LabeledGraph& g, const std::map<VertexId, int>& color, VertexId v,
                  int side) {
    std::vector<VertexId> anchors;
    for (VertexId w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it != color.end() && it->second == side) anchors.push_back(w);
    }
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        // BFS within the side from anchors[i] toward any later anchor
        std::set<VertexId> seen{anchors[i]};
        std::vector<VertexId> stack{anchors[i]};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (std::size_t j = i + 1; j < anchors.size(); ++j)
                if (x == anchors[j]) return true;
            for (VertexId w : g.neighbors(x)) {
                auto it = color.find(w);
                if (it != color.end() && it->second == side && w != v && seen.insert(w).second)
                    stack.push_back(w);
            }
        }
    }
    return false;
}

bool side_is_tree(const LabeledGraph& g, const std::vector<VertexId>& side) {
    if (side.empty()) return false;
    std::set<VertexId> want(side.begin(), side.end());
    std::set<VertexId> seen{side.front()};
    std::vector<VertexId> stack{side.front()};
    std::size_t edges = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (!want.count(w)) continue;
            ++edges;
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == want.size() && edges / 2 == want.size() - 1;
}

}  // namespace

std::optional<Bipartition> tree_arboricity_two(const LabeledGraph& g, const SearchLimits& limits) {
    validate_cubic(g);

    // assign vertices in BFS order so each new vertex touches colored ones
    std::vector<VertexId> order;
    {
        std::set<VertexId> seen;
        std::vector<VertexId> queue{g.vertices().front()};
        seen.insert(queue.front());
        for (std::size_t i = 0; i < queue.size(); ++i) {
            order.push_back(queue[i]);
            for (VertexId w : g.neighbors(queue[i]))
                if (seen.insert(w).second) queue.push_back(w);
        }
    }

    std::map<VertexId, int> color;
    std::uint64_t nodes = 0;
    std::optional<Bipartition> found;

    auto extract = [&]() {
        Bipartition part;
        for (const auto& [v, c] : color) (c == 0 ? part.first : part.second).push_back(v);
        return part;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
        if (++nodes > limits.max_nodes)
            throw LimitExceeded("tree_arboricity_two node budget exceeded", nodes);
        if (idx == order.size()) {
            Bipartition part = extract();
            if (side_is_tree(g, part.first) && side_is_tree(g, part.second)) {
                found = part;
                return true;
            }
            return false;
        }
        VertexId v = order[idx];
        // the first vertex goes to side 0 (the bipartition is unordered)
        for (int side = 0; side <= (idx == 0 ? 0 : 1); ++side) {
            if (closes_cycle(g, color, v, side)) continue;
            color[v] = side;
            if (rec(idx + 1)) return true;
            color.erase(v);
        }
        return false;
    };
    rec(0);
    return found;
}

std::pair<PhyloTree, PhyloTree> reconstruct_trees(const LabeledGraph& g, const Bipartition& part) {
    validate_cubic(g);
    std::map<VertexId, int> side;
    for (VertexId v : part.first) side[v] = 0;
    for (VertexId v : part.second) side[v] = 1;
    if (side.size() != g.num_vertices() || side.size() != part.first.size() + part.second.size())
        throw InvalidPartition("not a partition of the vertex set");
    for (VertexId v : g.vertices())
        if (!side.count(v)) throw InvalidPartition("vertex " + std::to_string(v) + " unassigned");
    if (!side_is_tree(g, part.first) || !side_is_tree(g, part.second))
        throw InvalidPartition("a side does not induce a tree");

    std::vector<Edge> crossing;
    for (const Edge& e : g.edges())
        if (side.at(e.first) != side.at(e.second)) crossing.push_back(e);

    // degree-deficiency balance: both sides lose one degree per crossing edge
    std::size_t mu1 = 0, mu2 = 0;
    for (const Edge& e : crossing) {
        ++(side.at(e.first) == 0 ? mu1 : mu2);
        ++(side.at(e.second) == 0 ? mu1 : mu2);
    }
    if (mu1 != crossing.size() || mu2 != crossing.size())
        throw Error("reconstruct_trees: deficiency balance violated");

    LabeledGraph t1, t2;
    for (VertexId v : part.first) t1.add_vertex(v);
    for (VertexId v : part.second) t2.add_vertex(v);
    for (const Edge& e : g.edges()) {
        if (side.at(e.first) != side.at(e.second)) continue;
        (side.at(e.first) == 0 ? t1 : t2).add_edge(e.first, e.second);
    }
    for (std::size_t i = 0; i < crossing.size(); ++i) {
        std::string taxon = "t" + std::to_string(i);
        const Edge& e = crossing[i];
        VertexId in1 = side.at(e.first) == 0 ? e.first : e.second;
        VertexId in2 = side.at(e.first) == 0 ? e.second : e.first;
        VertexId l1 = t1.add_vertex();
        t1.add_edge(in1, l1);
        t1.set_label(l1, taxon);
        VertexId l2 = t2.add_vertex();
        t2.add_edge(in2, l2);
        t2.set_label(l2, taxon);
    }
    return {make_phylo_tree(std::move(t1)), make_phylo_tree(std::move(t2))};
}

RecognitionResult is_display_graph(const LabeledGraph& g, const SearchLimits& limits) {
    RecognitionResult res;
    std::optional<Bipartition> part;
    try {
        part = tree_arboricity_two(g, limits);
    } catch (const LimitExceeded& e) {
        res.verdict = RecognitionResult::Verdict::Unknown;
        res.reason = e.what();
        return res;
    } catch (const Error& e) {
        res.verdict = RecognitionResult::Verdict::No;
        res.reason = e.what();
        return res;
    }
    if (!part) {
        res.verdict = RecognitionResult::Verdict::No;
        res.reason = "no bipartition into two induced trees";
        return res;
    }
    res.verdict = RecognitionResult::Verdict::Yes;
    res.witnesses = reconstruct_trees(g, *part);
    return res;
}

}  // namespace phylo
