#include "phylo/bramble.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace phylo {

namespace {

constexpr std::size_t kMaxElements = 128;

// elements intersected with V(g), deduped, sorted
std::vector<std::vector<VertexId>> filtered_elements(const LabeledGraph& g, const Bramble& b) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& elem : b.elements) {
        std::set<VertexId> live;
        for (VertexId v : elem)
            if (g.has_vertex(v)) live.insert(v);
        out.emplace_back(live.begin(), live.end());
    }
    return out;
}

bool intersects(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else
            return true;
    }
    return false;
}

}  // namespace

ValidityReport verify_bramble(const LabeledGraph& g, const Bramble& b) {
    ValidityReport report;
    auto elems = filtered_elements(g, b);

    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].empty()) {
            report.violations.push_back(
                {"connected", "element " + std::to_string(i) + " has no live vertices"});
            continue;
        }
        std::set<VertexId> want(elems[i].begin(), elems[i].end());
        std::set<VertexId> seen{elems[i].front()};
        std::vector<VertexId> stack{elems[i].front()};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v))
                if (want.count(w) && seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != want.size())
            report.violations.push_back(
                {"connected", "element " + std::to_string(i) + " is disconnected"});
    }

    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (elems[i].empty() || elems[j].empty()) continue;
            if (intersects(elems[i], elems[j])) continue;
            std::set<VertexId> other(elems[j].begin(), elems[j].end());
            bool touch = false;
            for (VertexId v : elems[i]) {
                for (VertexId w : g.neighbors(v))
                    if (other.count(w)) {
                        touch = true;
                        break;
                    }
                if (touch) break;
            }
            if (!touch)
                report.violations.push_back({"touch", "elements " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " do not touch"});
        }
    return report;
}

namespace {

using Mask = std::bitset<kMaxElements>;

struct HittingSearch {
    std::vector<std::vector<VertexId>> elems;
    std::map<VertexId, Mask> member;  // vertex -> elements it hits
    std::uint64_t nodes = 0, max_nodes;
    std::unordered_map<Mask, int> refuted;  // unhit-set -> highest budget that failed

    // greedy packing of pairwise vertex-disjoint unhit elements
    int packing_lb(const Mask& unhit) const {
        int lb = 0;
        std::set<VertexId> used;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (!unhit[i]) continue;
            bool disjoint = true;
            for (VertexId v : elems[i])
                if (used.count(v)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            ++lb;
            used.insert(elems[i].begin(), elems[i].end());
        }
        return lb;
    }

    bool search(const Mask& unhit, int budget, std::vector<VertexId>& picked) {
        if (unhit.none()) return true;
        if (budget <= 0 || packing_lb(unhit) > budget) return false;
        auto it = refuted.find(unhit);
        if (it != refuted.end() && it->second >= budget) return false;
        if (++nodes > max_nodes) throw LimitExceeded("hitting-set node budget exceeded", nodes);

        // branch on the unhit element with the fewest vertices
        std::size_t pick = kMaxElements;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (unhit[i] && (pick == kMaxElements || elems[i].size() < elems[pick].size()))
                pick = i;

        std::unordered_set<Mask> seen_sigs;
        for (VertexId v : elems[pick]) {
            Mask sig = member.at(v) & unhit;
            if (!seen_sigs.insert(sig).second) continue;  // interchangeable with a prior sibling
            picked.push_back(v);
            if (search(unhit & ~sig, budget - 1, picked)) return true;
            picked.pop_back();
        }
        auto& best = refuted[unhit];
        best = std::max(best, budget);
        return false;
    }
};

}  // namespace

HittingSet min_hitting_set(const LabeledGraph& g, const Bramble& b, const SearchLimits& limits) {
    auto report = verify_bramble(g, b);
    if (!report.valid()) throw InvalidCertificate("bramble invalid: " + report.summary());
    if (b.elements.size() > kMaxElements)
        throw InvalidParams("too many bramble elements (max " + std::to_string(kMaxElements) +
                            ")");

    HittingSearch hs;
    hs.elems = filtered_elements(g, b);
    hs.max_nodes = limits.max_nodes;
    Mask all;
    for (std::size_t i = 0; i < hs.elems.size(); ++i) {
        all.set(i);
        for (VertexId v : hs.elems[i]) hs.member[v].set(i);
    }

    // greedy upper bound: max coverage, ties by lowest id
    int ub = 0;
    {
        Mask unhit = all;
        while (unhit.any()) {
            VertexId best = -1;
            std::size_t best_cover = 0;
            for (const auto& [v, mask] : hs.member) {
                std::size_t c = (mask & unhit).count();
                if (c > best_cover) {
                    best = v;
                    best_cover = c;
                }
            }
            unhit &= ~hs.member.at(best);
            ++ub;
        }
    }

    for (int target = hs.packing_lb(all);; ++target) {
        if (target > ub) throw Error("min_hitting_set: search inconsistency");
        std::vector<VertexId> picked;
        if (hs.search(all, target, picked)) {
            std::sort(picked.begin(), picked.end());
            return {static_cast<int>(picked.size()), picked};
        }
    }
}

int tw_lower_bound(const LabeledGraph& g, const Bramble& b, const SearchLimits& limits) {
    return min_hitting_set(g, b, limits).size - 1;
}

std::string write_bramble(const Bramble& b) {
    std::string out;
    for (const auto& elem : b.elements) {
        for (std::size_t i = 0; i < elem.size(); ++i)
            out += (i ? " " : "") + std::to_string(elem[i]);
        out += "\n";
    }
    return out;
}

Bramble read_bramble(const std::string& text) {
    Bramble b;
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<VertexId> elem;
        VertexId v;
        while (ls >> v) elem.push_back(v);
        if (!ls.eof()) throw ParseError("bad bramble element line", 0);
        b.elements.push_back(std::move(elem));
    }
    return b;
}

}  // namespace phylo
