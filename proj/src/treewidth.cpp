#include "phylo/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace phylo {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::string ValidityReport::summary() const {
    if (valid()) return "valid, width " + std::to_string(width);
    std::string s = "invalid (width " + std::to_string(width) + "):";
    for (const auto& v : violations) s += "\n  " + v.property + ": " + v.witness;
    return s;
}

ValidityReport validate_decomposition(const LabeledGraph& g, const TreeDecomposition& td) {
    ValidityReport report;
    report.width = td.width();
    const int q = static_cast<int>(td.bags.size());

    // decomposition tree shape
    for (const auto& [i, j] : td.tree)
        if (i < 0 || i >= q || j < 0 || j >= q)
            report.violations.push_back({"tree", "edge references bag index out of range"});
    if (!report.violations.empty()) return report;
    if (q > 0) {
        std::vector<std::vector<int>> nbr(q);
        for (const auto& [i, j] : td.tree) {
            nbr[i].push_back(j);
            nbr[j].push_back(i);
        }
        std::vector<bool> seen(q, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nbr[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != q)
            report.violations.push_back({"tree", "decomposition tree is disconnected"});
        if (td.tree.size() + 1 != static_cast<std::size_t>(q))
            report.violations.push_back({"tree", "decomposition tree has a cycle or repeated edge"});
    }

    // tw1
    std::set<VertexId> covered;
    for (const auto& bag : td.bags)
        for (VertexId v : bag) covered.insert(v);
    for (VertexId v : g.vertices())
        if (!covered.count(v))
            report.violations.push_back({"tw1", "vertex " + std::to_string(v) + " in no bag"});
    for (VertexId v : covered)
        if (!g.has_vertex(v))
            report.violations.push_back(
                {"tw1", "bag vertex " + std::to_string(v) + " not in graph"});

    // tw2
    auto in_bag = [&](const std::vector<VertexId>& bag, VertexId v) {
        return std::binary_search(bag.begin(), bag.end(), v);
    };
    std::set<Edge> distinct_edges;
    for (const Edge& e : g.edges()) distinct_edges.insert(e);
    for (const Edge& e : distinct_edges) {
        bool ok = false;
        for (const auto& bag : td.bags)
            if (in_bag(bag, e.first) && in_bag(bag, e.second)) {
                ok = true;
                break;
            }
        if (!ok)
            report.violations.push_back({"tw2", "edge {" + std::to_string(e.first) + "," +
                                                    std::to_string(e.second) + "} uncovered"});
    }

    // tw3: the bags containing v must induce a connected subtree
    if (report.violations.empty() || true) {
        std::vector<std::vector<int>> nbr(q);
        for (const auto& [i, j] : td.tree) {
            if (i >= 0 && i < q && j >= 0 && j < q) {
                nbr[i].push_back(j);
                nbr[j].push_back(i);
            }
        }
        for (VertexId v : g.vertices()) {
            std::vector<int> holds;
            for (int i = 0; i < q; ++i)
                if (in_bag(td.bags[i], v)) holds.push_back(i);
            if (holds.size() <= 1) continue;
            std::set<int> target(holds.begin(), holds.end());
            std::set<int> seen{holds[0]};
            std::vector<int> stack{holds[0]};
            while (!stack.empty()) {
                int b = stack.back();
                stack.pop_back();
                for (int w : nbr[b])
                    if (target.count(w) && seen.insert(w).second) stack.push_back(w);
            }
            if (seen.size() != target.size())
                report.violations.push_back(
                    {"tw3", "bags containing vertex " + std::to_string(v) + " are disconnected"});
        }
    }
    return report;
}

namespace {

LabeledGraph collapse_parallel(const LabeledGraph& g) {
    LabeledGraph s;
    for (VertexId v : g.vertices()) s.add_vertex(v);
    std::set<Edge> seen;
    for (const Edge& e : g.edges())
        if (seen.insert(e).second) s.add_edge(e.first, e.second);
    return s;
}

// Builds a tree decomposition from an elimination order by simulating the
// eliminations (bag of v = v plus its neighbors at elimination time).
TreeDecomposition td_from_order(const LabeledGraph& simple, const std::vector<VertexId>& order) {
    std::map<VertexId, std::set<VertexId>> adj;
    for (VertexId v : simple.vertices()) adj[v];
    for (const Edge& e : simple.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::map<VertexId, int> pos;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;

    TreeDecomposition td;
    std::vector<std::vector<VertexId>> bag_contents(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        VertexId v = order[i];
        std::vector<VertexId> bag{v};
        for (VertexId w : adj[v]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        bag_contents[i] = bag;
        // fill in, then remove v
        for (VertexId a : adj[v])
            for (VertexId b : adj[v])
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (VertexId w : adj[v]) adj[w].erase(v);
        adj.erase(v);
    }
    td.bags = bag_contents;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        // parent = earliest-eliminated other member of the bag
        int parent = -1;
        for (VertexId w : td.bags[i]) {
            if (w == order[i]) continue;
            int p = pos.at(w);
            if (p > i && (parent == -1 || p < parent)) parent = p;
        }
        if (parent == -1 && i + 1 < static_cast<int>(order.size())) parent = i + 1;
        if (parent != -1) td.tree.push_back({i, parent});
    }
    return td;
}

int mmd_on_sets(std::map<VertexId, std::set<VertexId>> adj) {
    int lb = 0;
    while (adj.size() >= 2) {
        VertexId best = -1;
        std::size_t best_deg = SIZE_MAX;
        for (const auto& [v, nb] : adj)
            if (nb.size() < best_deg) {
                best_deg = nb.size();
                best = v;
            }
        lb = std::max(lb, static_cast<int>(best_deg));
        if (best_deg == 0) {
            adj.erase(best);
            continue;
        }
        // contract into the neighbor of least degree
        VertexId mate = -1;
        std::size_t mate_deg = SIZE_MAX;
        for (VertexId w : adj.at(best))
            if (adj.at(w).size() < mate_deg) {
                mate_deg = adj.at(w).size();
                mate = w;
            }
        for (VertexId w : adj.at(best)) {
            adj.at(w).erase(best);
            if (w != mate) {
                adj.at(mate).insert(w);
                adj.at(w).insert(mate);
            }
        }
        adj.erase(best);
    }
    return lb;
}

std::map<VertexId, std::set<VertexId>> to_sets(const LabeledGraph& simple) {
    std::map<VertexId, std::set<VertexId>> adj;
    for (VertexId v : simple.vertices()) adj[v];
    for (const Edge& e : simple.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    return adj;
}

// ---- bitmask machinery for the exact solvers (n <= 64) -------------------

struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<VertexId> ids;  // index -> original vertex id
};

BitGraph to_bitgraph(const std::map<VertexId, std::set<VertexId>>& adj) {
    BitGraph bg;
    std::map<VertexId, int> index;
    for (const auto& [v, nb] : adj) {
        index[v] = bg.n++;
        bg.ids.push_back(v);
    }
    bg.adj.assign(bg.n, 0);
    for (const auto& [v, nb] : adj)
        for (VertexId w : nb) bg.adj[index[v]] |= 1ULL << index[w];
    return bg;
}

int popcount(std::uint64_t x) { return std::popcount(x); }

// Subset DP: f(S) = min over v in S of max(f(S\v), q(S\v, v)), where q is the
// number of vertices outside S+v seen from v's component within S+v.
int q_value(const BitGraph& g, std::uint64_t s, int v) {
    std::uint64_t inside = s | (1ULL << v);
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    std::uint64_t reach = 0;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            reach |= g.adj[u];
            next |= g.adj[u] & inside & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return popcount(reach & ~inside);
}

std::vector<VertexId> dp_order(const BitGraph& g) {
    const int n = g.n;
    const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    std::vector<std::int8_t> f(static_cast<std::size_t>(full) + 1, 0);
    f[0] = -1;
    for (std::uint64_t s = 1; s <= full; ++s) {
        int best = 127;
        std::uint64_t bits = s;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint64_t rest = s & ~(1ULL << v);
            int w = std::max<int>(f[rest], q_value(g, rest, v));
            best = std::min(best, w);
        }
        f[s] = static_cast<std::int8_t>(best);
    }
    // reconstruct: repeatedly peel the last-eliminated vertex of the prefix
    std::vector<VertexId> order(n);
    std::uint64_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t bits = s;
        int chosen = -1;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint64_t rest = s & ~(1ULL << v);
            if (std::max<int>(f[rest], q_value(g, rest, v)) == f[s]) {
                chosen = v;
                break;
            }
        }
        order[i] = g.ids[chosen];
        s &= ~(1ULL << chosen);
    }
    return order;
}

// Decision search: is there an elimination order of width <= k? DFS over
// eliminations of vertices whose current degree is <= k, with failed states
// memoized on the alive-vertex mask. Simplicial vertices are eliminated
// without branching (always safe).
struct DecideCtx {
    int k;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    std::unordered_set<std::uint64_t> failed;
};

bool decide(std::vector<std::uint64_t>& adj, const BitGraph& g, std::uint64_t alive,
            DecideCtx& ctx, std::vector<int>& order) {
    if (popcount(alive) <= ctx.k + 1) {
        std::uint64_t bits = alive;
        while (bits) {
            order.push_back(std::countr_zero(bits));
            bits &= bits - 1;
        }
        return true;
    }
    if (ctx.failed.count(alive)) return false;
    if (++ctx.nodes > ctx.node_limit)
        throw LimitExceeded("treewidth decision search exceeded node limit", ctx.nodes);

    auto eliminate = [&](int v) {
        std::uint64_t nb = adj[v] & alive;
        std::uint64_t bits = nb;
        while (bits) {
            int a = std::countr_zero(bits);
            bits &= bits - 1;
            adj[a] |= nb & ~(1ULL << a);
        }
    };

    // forced move: a simplicial vertex of degree <= k
    {
        std::uint64_t bits = alive;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint64_t nb = adj[v] & alive;
            if (popcount(nb) > ctx.k) continue;
            bool clique = true;
            std::uint64_t b2 = nb;
            while (b2 && clique) {
                int a = std::countr_zero(b2);
                b2 &= b2 - 1;
                if ((nb & ~(1ULL << a) & ~adj[a]) != 0) clique = false;
            }
            if (clique) {
                std::vector<std::uint64_t> saved = adj;
                eliminate(v);
                order.push_back(v);
                if (decide(adj, g, alive & ~(1ULL << v), ctx, order)) return true;
                order.pop_back();
                adj = saved;
                ctx.failed.insert(alive);
                return false;
            }
        }
    }

    std::uint64_t bits = alive;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        if (popcount(adj[v] & alive) > ctx.k) continue;
        std::vector<std::uint64_t> saved = adj;
        eliminate(v);
        order.push_back(v);
        if (decide(adj, g, alive & ~(1ULL << v), ctx, order)) return true;
        order.pop_back();
        adj = saved;
    }
    ctx.failed.insert(alive);
    return false;
}

std::vector<VertexId> greedy_order(const LabeledGraph& simple, UbStrategy strategy) {
    auto adj = to_sets(simple);
    std::vector<VertexId> order;
    while (!adj.empty()) {
        VertexId best = -1;
        long best_score = -1;
        for (const auto& [v, nb] : adj) {
            long score;
            if (strategy == UbStrategy::MinDegree) {
                score = static_cast<long>(nb.size());
            } else {
                long fill = 0;
                for (auto it = nb.begin(); it != nb.end(); ++it)
                    for (auto jt = std::next(it); jt != nb.end(); ++jt)
                        if (!adj.at(*it).count(*jt)) ++fill;
                score = fill;
            }
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        order.push_back(best);
        for (VertexId a : adj.at(best))
            for (VertexId b : adj.at(best))
                if (a < b) {
                    adj.at(a).insert(b);
                    adj.at(b).insert(a);
                }
        for (VertexId w : adj.at(best)) adj.at(w).erase(best);
        adj.erase(best);
    }
    return order;
}

}  // namespace

int lower_bound_mmd(const LabeledGraph& g) {
    return mmd_on_sets(to_sets(collapse_parallel(g)));
}

ExactResult heuristic_ub(const LabeledGraph& g, UbStrategy strategy) {
    LabeledGraph simple = collapse_parallel(g);
    if (simple.num_vertices() == 0) return {-1, {}};
    auto order = greedy_order(simple, strategy);
    TreeDecomposition td = td_from_order(simple, order);
    return {td.width(), std::move(td)};
}

ExactResult exact_treewidth(const LabeledGraph& g, const TreewidthLimits& limits) {
    LabeledGraph simple = collapse_parallel(g);
    if (simple.num_vertices() == 0) throw Error("exact_treewidth: empty graph");

    // Safe reductions. Simplicial vertices can always head an optimal
    // elimination order (their neighborhood is a clique, so it witnesses the
    // width they force). Once no simplicial vertex remains, every leftover
    // vertex has degree >= 2, the leftover graph contains a cycle, so the
    // treewidth is at least 2 and eliminating a degree-2 vertex is also safe.
    // `low` tracks the width the eliminated prefix forces.
    auto adj = to_sets(simple);
    std::vector<VertexId> prefix;
    int low = 0;
    auto eliminate = [&](std::map<VertexId, std::set<VertexId>>::iterator it) {
        const auto& nb = it->second;
        for (VertexId a : nb)
            for (VertexId b : nb)
                if (a < b) {
                    adj.at(a).insert(b);
                    adj.at(b).insert(a);
                }
        for (VertexId w : nb) adj.at(w).erase(it->first);
        prefix.push_back(it->first);
        adj.erase(it);
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = adj.begin(); it != adj.end(); ++it) {
            const auto& nb = it->second;
            bool simplicial = true;
            for (auto a = nb.begin(); a != nb.end() && simplicial; ++a)
                for (auto b = std::next(a); b != nb.end() && simplicial; ++b)
                    if (!adj.at(*a).count(*b)) simplicial = false;
            if (!simplicial) continue;
            low = std::max(low, static_cast<int>(nb.size()));
            eliminate(it);
            progress = true;
            break;
        }
        if (progress || adj.empty()) continue;
        for (auto it = adj.begin(); it != adj.end(); ++it) {
            if (it->second.size() != 2) continue;
            low = std::max(low, 2);
            eliminate(it);
            progress = true;
            break;
        }
    }

    std::vector<VertexId> order = prefix;
    const int m = static_cast<int>(adj.size());
    if (m > 0 && m <= limits.dp_budget && m <= 64) {
        auto solved = dp_order(to_bitgraph(adj));
        order.insert(order.end(), solved.begin(), solved.end());
    } else if (m > 0 && m <= 64) {
        // iterative deepening on the reduced graph
        LabeledGraph rest;
        for (const auto& [v, nb] : adj) rest.add_vertex(v);
        for (const auto& [v, nb] : adj)
            for (VertexId w : nb)
                if (v < w) rest.add_edge(v, w);
        BitGraph bg = to_bitgraph(adj);
        int lb = mmd_on_sets(adj);
        auto greedy = greedy_order(rest, UbStrategy::MinFill);
        int ub = td_from_order(rest, greedy).width();
        const std::uint64_t full = bg.n == 64 ? ~0ULL : (1ULL << bg.n) - 1;
        std::vector<int> found;
        std::uint64_t nodes_used = 0;
        for (int k = std::max(lb, 1); k < ub; ++k) {
            DecideCtx ctx{k, limits.node_limit - nodes_used, {}};
            std::vector<std::uint64_t> work = bg.adj;
            std::vector<int> attempt;
            bool ok;
            try {
                ok = decide(work, bg, full, ctx, attempt);
            } catch (const LimitExceeded&) {
                throw BudgetExceeded("treewidth branch and bound exceeded node limit",
                                     std::max(low, k), std::max(low, ub));
            }
            nodes_used += ctx.nodes;
            if (ok) {
                found = attempt;
                break;
            }
        }
        if (found.empty()) {
            // all widths below ub refuted: the greedy order is optimal
            order.insert(order.end(), greedy.begin(), greedy.end());
        } else {
            for (int idx : found) order.push_back(bg.ids[idx]);
        }
    } else if (m > 64) {
        int lb = std::max(low, mmd_on_sets(adj));
        ExactResult heur = heuristic_ub(g, UbStrategy::MinFill);
        throw BudgetExceeded("graph too large for exact treewidth", lb, heur.width);
    }

    TreeDecomposition td = td_from_order(simple, order);
    return {td.width(), std::move(td)};
}

}  // namespace phylo
