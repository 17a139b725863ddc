#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phylo/core.hpp"
#include "phylo/treewidth.hpp"  // ValidityReport

namespace phylo {

// Witness that N displays T: a subtree N' of N (given by its edges) together
// with a surjection f from V(N') onto V(T) such that
//   (1) f fixes every taxon,
//   (2) the fibers f^-1(v) are disjoint and each induces a connected subtree,
//   (3) every edge {u,v} of T has exactly one image edge {a,b} in N' with
//       f(a) = u, f(b) = v.
struct EmbeddingCertificate {
    std::vector<Edge> image_edges;            // edges of N, sorted
    std::map<VertexId, VertexId> vertex_map;  // V(N') -> V(T)
};

ValidityReport verify_embedding(const PhyloNetwork& n, const PhyloTree& t,
                                const EmbeddingCertificate& cert);

std::string write_certificate(const EmbeddingCertificate& cert);
EmbeddingCertificate read_certificate(const std::string& text);

// Unrooted 4-taxon topology {a,b} | {c,d}, stored canonically: a < b, c < d,
// a < c (lexicographic on taxon names).
struct Quartet {
    std::array<std::string, 4> taxa;  // a, b, c, d

    static Quartet make(std::string a, std::string b, std::string c, std::string d);
    auto operator<=>(const Quartet&) const = default;
    std::string str() const;
};

// The induced quartet topology for every 4-subset of X; |result| = C(|X|, 4).
// Requires |X| >= 4.
std::set<Quartet> quartet_set(const PhyloTree& t);

// Minimal subtree spanning the taxa, unlabeled degree-2 vertices suppressed.
// Surviving vertices keep their ids from the input tree.
PhyloTree restrict_and_suppress(const LabeledGraph& spanning_tree,
                                const std::vector<std::string>& taxa);

// Same, but also keeps the unsuppressed Steiner subtree so callers can see
// which degree-2 path vertices sit between which surviving vertices.
struct SteinerRestriction {
    LabeledGraph steiner;  // subtree of the input spanning the taxa
    PhyloTree suppressed;  // ids are a subset of steiner's
};
SteinerRestriction restrict_tracked(const LabeledGraph& tree,
                                    const std::vector<std::string>& taxa);

// Leaf-label-respecting topology equality via canonical encodings.
bool labeled_tree_isomorphic(const PhyloTree& t1, const PhyloTree& t2);
// Same, but also reports the vertex correspondence t1 -> t2 when isomorphic.
std::optional<std::map<VertexId, VertexId>> labeled_tree_isomorphism(const PhyloTree& t1,
                                                                     const PhyloTree& t2);

// Build a certificate from a labeled subtree of N that spans the taxa and
// whose restriction is labeled-isomorphic to T. Degree-2 path vertices map to
// the endpoint whose image is nearer along the path, ties to the endpoint
// with the smaller vertex id. Throws InvalidCertificate when the restriction
// does not match T.
EmbeddingCertificate certificate_from_subtree(const LabeledGraph& subtree, const PhyloTree& t);

struct SearchLimits {
    std::uint64_t max_nodes = 10'000'000;
};

// Decides whether N displays T by branching on the edges of a shortest cycle
// (depth r(N)); every acyclic leaf is a spanning tree whose restriction to X
// is compared against T. The returned certificate always passes
// verify_embedding. Throws LimitExceeded when the node budget runs out.
std::optional<EmbeddingCertificate> find_display(const PhyloNetwork& n, const PhyloTree& t,
                                                 const SearchLimits& limits = {});

// Brute-force oracle: true iff deleting some r(N)-subset of E(N) leaves a
// spanning tree displaying exactly the quartets of T. Requires |X| >= 4.
bool displays_via_quartets(const PhyloNetwork& n, const PhyloTree& t,
                           const SearchLimits& limits = {});

}  // namespace phylo
