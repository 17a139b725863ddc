#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phylo/bramble.hpp"
#include "phylo/constructions.hpp"
#include "phylo/display.hpp"
#include "phylo/io.hpp"
#include "phylo/recognition.hpp"
#include "phylo/transforms.hpp"

using nlohmann::json;
using namespace phylo;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 66;

struct Options {
    std::uint64_t limit_nodes = 10'000'000;
    unsigned seed = 0;
    std::string format = "text";
    std::string out;
    int threads = 1;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitIo);
    }
    return {std::istreambuf_iterator<char>(f), {}};
}

class Sink {
public:
    explicit Sink(const Options& opt) : opt_(opt) {
        if (!opt.out.empty() && opt.out != "-") {
            file_.open(opt.out, std::ios::binary);
            if (!file_) {
                std::cerr << "error: cannot write " << opt.out << "\n";
                std::exit(kExitIo);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    // one logical record: a text line or a json-lines object
    void record(const json& j, const std::string& text) {
        if (opt_.format == "json-lines")
            stream() << j.dump() << "\n";
        else
            stream() << text << "\n";
    }
    // bulk payload (file formats); emitted verbatim in both modes
    void payload(const std::string& body) { stream() << body; }

private:
    const Options& opt_;
    std::ofstream file_;
};

PhyloTree load_tree(const std::string& path) { return parse_newick(slurp(path)); }

PhyloNetwork load_network(const std::string& path) {
    std::string text = slurp(path);
    if (path.size() > 4 && path.substr(path.size() - 4) == ".nwk")
        return as_network(parse_newick(text));
    return parse_network_edgelist(text);
}

LabeledGraph load_graph(const std::string& path) {
    std::string text = slurp(path);
    if (path.size() > 3 && path.substr(path.size() - 3) == ".el") return read_edgelist(text);
    return read_gr(text);
}

GridParams parse_grid(int r, int n) { return GridParams{r, n}; }

// ascending vertex ids -> 0..n-1, matching the renumbering write_gr applies
std::map<VertexId, VertexId> rank_map(const LabeledGraph& g) {
    std::map<VertexId, VertexId> out;
    VertexId next = 0;
    for (VertexId v : g.vertices()) out[v] = next++;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"display graphs of phylogenetic trees and networks"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--limit-nodes", opt.limit_nodes, "search node budget");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--out", opt.out, "output file (default stdout)");
    app.add_option("--threads", opt.threads, "max worker threads");

    // build-display
    std::string first_path, second_path;
    bool do_suppress = false;
    auto* build = app.add_subcommand("build-display", "display graph of two inputs");
    build->add_option("--first", first_path, "tree (.nwk) or network (.el)")->required();
    build->add_option("--second", second_path, "tree (.nwk) or network (.el)")->required();
    build->add_flag("--suppress", do_suppress, "suppress degree-2 vertices");

    // treewidth
    std::string graph_path, td_path, strategy = "exact";
    auto* tw = app.add_subcommand("treewidth", "treewidth of a graph (.gr or .el)");
    tw->add_option("--graph", graph_path, "input graph")->required();
    tw->add_option("--strategy", strategy, "exact | min-fill | min-degree | lb")
        ->check(CLI::IsMember({"exact", "min-fill", "min-degree", "lb"}));
    tw->add_option("--emit-td", td_path, "write the decomposition here (.td)");

    // validate-td
    std::string vtd_graph, vtd_td = "-";
    auto* vtd = app.add_subcommand("validate-td", "check a tree decomposition");
    vtd->add_option("--graph", vtd_graph, "input graph")->required();
    vtd->add_option("--td", vtd_td, "decomposition (.td, default stdin)");

    // check-display
    std::string net_path, tree_path;
    auto* chk = app.add_subcommand("check-display", "does the network display the tree");
    chk->add_option("--network", net_path, "network (.el or .nwk)")->required();
    chk->add_option("--tree", tree_path, "tree (.nwk)")->required();

    // bounds
    auto* bnd = app.add_subcommand("bounds", "certified treewidth bounds for D(N,T)");
    bnd->add_option("--network", net_path, "network (.el or .nwk)")->required();
    bnd->add_option("--tree", tree_path, "tree (.nwk)")->required();

    // verify-bramble / hitting-set
    std::string br_graph, br_path;
    auto* vbr = app.add_subcommand("verify-bramble", "check a bramble against its host");
    vbr->add_option("--graph", br_graph, "host graph")->required();
    vbr->add_option("--bramble", br_path, "bramble, one element per line")->required();
    auto* hit = app.add_subcommand("hitting-set", "exact minimum hitting set of a bramble");
    hit->add_option("--graph", br_graph, "host graph")->required();
    hit->add_option("--bramble", br_path, "bramble, one element per line")->required();

    // generate-grid
    int grid_r = 2, grid_n = 7;
    std::string emit = "network";
    auto* gen = app.add_subcommand("generate-grid", "grid family generator");
    gen->add_option("--r", grid_r, "rows (even)")->required();
    gen->add_option("--n", grid_n, "columns (> 2r+2)")->required();
    gen->add_option("--emit", emit, "what to emit")
        ->check(CLI::IsMember(
            {"network", "network-gr", "tree", "embedding", "td", "bramble", "display"}));

    // recognize
    auto* rec = app.add_subcommand("recognize", "is the graph a suppressed display graph");
    rec->add_option("--graph", graph_path, "input graph (.gr)")->required();

    // quartets
    auto* qrt = app.add_subcommand("quartets", "quartet set of a tree");
    qrt->add_option("--tree", tree_path, "tree (.nwk)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    Sink sink(opt);
    SearchLimits limits{opt.limit_nodes};

    try {
        if (*build) {
            auto a = load_network(first_path), b = load_network(second_path);
            DisplayGraph d = build_display_graph(a, b);
            LabeledGraph g = do_suppress ? suppress(d.graph) : d.graph;
            if (opt.format == "json-lines")
                sink.record({{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}, "");
            sink.payload(do_suppress ? write_gr(g) : write_edgelist(g));
        } else if (*tw) {
            LabeledGraph g = load_graph(graph_path);
            if (strategy == "lb") {
                int lb = lower_bound_mmd(g);
                sink.record({{"lower_bound", lb}}, "lower bound " + std::to_string(lb));
            } else {
                ExactResult res =
                    strategy == "exact"
                        ? exact_treewidth(g)
                        : heuristic_ub(g, strategy == "min-fill" ? UbStrategy::MinFill
                                                                 : UbStrategy::MinDegree);
                sink.record({{"width", res.width}, {"exact", strategy == "exact"}},
                            "width " + std::to_string(res.width));
                if (!td_path.empty()) {
                    std::ofstream f(td_path);
                    if (!f) return kExitIo;
                    f << write_td(res.td, static_cast<int>(g.num_vertices()));
                }
            }
        } else if (*vtd) {
            LabeledGraph g = load_graph(vtd_graph);
            TreeDecomposition td = read_td(slurp(vtd_td));
            auto report = validate_decomposition(g, td);
            sink.record({{"valid", report.valid()}, {"width", report.width}},
                        report.summary());
            return report.valid() ? 0 : 1;
        } else if (*chk) {
            PhyloNetwork n = load_network(net_path);
            PhyloTree t = load_tree(tree_path);
            std::optional<EmbeddingCertificate> cert;
            try {
                cert = find_display(n, t, limits);
            } catch (const LimitExceeded& e) {
                sink.record({{"verdict", "unknown"}, {"nodes", e.nodes_explored}}, "unknown");
                return 2;
            }
            if (!cert) {
                sink.record({{"verdict", "no"}}, "no");
                return 1;
            }
            sink.record({{"verdict", "yes"}}, "yes");
            sink.payload(write_certificate(*cert));
            return 0;
        } else if (*bnd) {
            PhyloNetwork n = load_network(net_path);
            PhyloTree t = load_tree(tree_path);
            auto cert = find_display(n, t, limits);
            if (!cert) {
                sink.record({{"displays", false}}, "network does not display the tree");
                return 1;
            }
            ExactResult tw_n = exact_treewidth(n.graph);
            BoundBundle b = bound_bundle(n, t, *cert, tw_n.td);
            sink.record({{"tw_network", tw_n.width},
                         {"two_tw_plus_1", b.two_tw_plus_1},
                         {"retic_plus_2", b.retic_plus_2},
                         {"level_plus_2", b.level_plus_2},
                         {"min", b.min}},
                        "tw(N) " + std::to_string(tw_n.width) + "; bounds " +
                            std::to_string(b.two_tw_plus_1) + " " +
                            std::to_string(b.retic_plus_2) + " " +
                            std::to_string(b.level_plus_2) + "; min " + std::to_string(b.min));
        } else if (*vbr) {
            LabeledGraph g = load_graph(br_graph);
            Bramble b = read_bramble(slurp(br_path));
            auto report = verify_bramble(g, b);
            sink.record({{"valid", report.valid()}}, report.summary());
            return report.valid() ? 0 : 1;
        } else if (*hit) {
            LabeledGraph g = load_graph(br_graph);
            Bramble b = read_bramble(slurp(br_path));
            HittingSet hs = min_hitting_set(g, b, limits);
            std::string verts;
            for (VertexId v : hs.vertices) verts += (verts.empty() ? "" : " ") + std::to_string(v);
            sink.record({{"size", hs.size}, {"vertices", hs.vertices}},
                        "size " + std::to_string(hs.size) + ": " + verts);
        } else if (*gen) {
            GridParams p = parse_grid(grid_r, grid_n);
            if (emit == "network")
                sink.payload(write_network_edgelist(grid_network(p)));
            else if (emit == "network-gr")
                sink.payload(write_gr(grid_network(p).graph));
            else if (emit == "tree")
                sink.payload(write_newick(grid_tree(p)));
            else if (emit == "embedding")
                sink.payload(write_certificate(grid_embedding(p)));
            else if (emit == "td") {
                // ids renumbered to match the network-gr emission
                LabeledGraph g = grid_network(p).graph;
                auto rank = rank_map(g);
                TreeDecomposition td = grid_path_decomposition(p);
                for (auto& bag : td.bags)
                    for (VertexId& v : bag) v = rank.at(v);
                sink.payload(write_td(td, static_cast<int>(g.num_vertices())));
            } else if (emit == "bramble") {
                // ids renumbered to match the display emission
                auto d = grid_display(p);
                auto rank = rank_map(d.suppressed);
                Bramble b = grid_bramble(p);
                for (auto& elem : b.elements)
                    for (VertexId& v : elem) v = rank.at(v);
                sink.payload(write_bramble(b));
            } else
                sink.payload(write_gr(grid_display(p).suppressed));
        } else if (*rec) {
            LabeledGraph g = load_graph(graph_path);
            RecognitionResult res = is_display_graph(g, limits);
            if (res.verdict == RecognitionResult::Verdict::Unknown) {
                sink.record({{"verdict", "unknown"}, {"reason", res.reason}}, "unknown");
                return 2;
            }
            if (res.verdict == RecognitionResult::Verdict::No) {
                sink.record({{"verdict", "no"}, {"reason", res.reason}}, "no: " + res.reason);
                return 1;
            }
            const auto& [t1, t2] = *res.witnesses;
            sink.record({{"verdict", "yes"},
                         {"first", write_newick(t1)},
                         {"second", write_newick(t2)}},
                        "yes");
            if (opt.format == "text") sink.payload(write_newick(t1) + "\n" + write_newick(t2) + "\n");
        } else if (*qrt) {
            PhyloTree t = load_tree(tree_path);
            for (const Quartet& q : quartet_set(t))
                sink.record({{"quartet", q.str()}}, q.str());
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
