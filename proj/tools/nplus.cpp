// nplus: generate graphs, certify line graphs, list stable set polytope facets, and run the
// exhaustive cross-checks. Exit codes: 0 ok/perfect, 1 imperfect/check failed, 2 error.

#include "nplus/classify.hpp"
#include "nplus/corpus.hpp"
#include "nplus/families.hpp"
#include "nplus/io.hpp"
#include "nplus/polytope.hpp"
#include "nplus/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace nplus;

namespace {

constexpr const char* kSkipped = "skipped: limit";

struct Common {
    int max_nodes = 18;   // root nodes for the subset scan
    int hull_nodes = 14;  // nodes of the graph whose facets are enumerated
    int jobs = 1;
    bool compact = false;
    std::uint64_t seed = 1;
};

void emit(const Json& j, const Common& c) { std::cout << (c.compact ? j.dump() : j.dump(2)) << '\n'; }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

PolytopeLimits limits_of(const Common& c) {
    PolytopeLimits l;
    l.facet_nodes = c.hull_nodes;
    return l;
}

Json input_summary(const Multigraph& g) {
    return Json{{"n", g.node_count()}, {"m", g.edge_count()}, {"parallel_edges", g.parallel_edge_count()}};
}

int cmd_generate(const FamilySpec& spec, const std::string& out) {
    const Multigraph g = generate(spec);
    if (spec.kind == "antiweb" || spec.kind == "web") {
        if (is_degenerate_antiweb(spec.n, spec.k)) std::cerr << "warning: 2k > n gives an edgeless antiweb\n";
    }
    if (out.empty() || out == "-") {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        write_edge_list(f, g);
    }
    return 0;
}

int cmd_certify(const std::string& path, bool with_facets, const Common& c) {
    const Multigraph h = load_edge_list(path);
    Json report{{"input", input_summary(h)}};
    Json timing = Json::object();

    auto t0 = std::chrono::steady_clock::now();
    const NPlusCertificate cert = decide_line_nplus_perfect(h, DecideOptions{c.max_nodes});
    timing["decide_ms"] = ms_since(t0);
    report["nplus_perfect"] = cert.perfect();
    report["certificate"] = to_json(cert);

    if (h.edge_count() <= c.hull_nodes) {
        t0 = std::chrono::steady_clock::now();
        const EdmondsReport er = verify_edmonds_description(h, limits_of(c));
        bool h_perfect = true, joined = true;
        StabOracle oracle(line_graph(h).graph, limits_of(c));
        for (const ClassifiedFacet& f : er.facets) {
            const FacetClass plain = oracle.classify(f.inequality);
            if (plain.kind != FacetKind::Nonnegativity && plain.kind != FacetKind::Clique && plain.kind != FacetKind::OddHoleRank)
                h_perfect = false;
            if (plain.kind != FacetKind::Nonnegativity && !oracle.as_joined_antiweb(f.inequality)) joined = false;
        }
        report["h_perfect"] = h_perfect;
        report["joined_a_perfect"] = joined;
        report["edmonds_description"] = er.pass;
        if (with_facets) report["facets"] = to_json(er.facets);
        timing["facets_ms"] = ms_since(t0);
    } else {
        report["h_perfect"] = kSkipped;
        report["joined_a_perfect"] = kSkipped;
        report["edmonds_description"] = kSkipped;
    }
    report["timing"] = timing;
    emit(report, c);
    return cert.perfect() ? 0 : 1;
}

int cmd_facets(const std::string& graph_path, const std::string& root_path, bool line_only, const Common& c) {
    if (graph_path.empty() && root_path.empty()) throw InputError("give a graph, a --root, or both");
    std::optional<Multigraph> root;
    if (!root_path.empty()) root = load_edge_list(root_path);
    const Multigraph g = graph_path.empty() ? line_graph(*root).graph : load_edge_list(graph_path);

    std::optional<RootMap> rm;
    if (root && !line_only) {
        const LineGraphResult lg = line_graph(*root);
        auto iso = find_isomorphism(g, lg.graph);
        if (!iso) throw InputError("graph is not the line graph of the given root");
        RootMap m{*root, {}};
        for (NodeId v = 0; v < g.node_count(); ++v)
            m.node_to_edge.push_back(lg.node_to_edge[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(v)])]);
        rm = std::move(m);
    }
    StabOracle oracle(g, limits_of(c));
    std::vector<ClassifiedFacet> out;
    for (const Inequality& f : oracle.facets()) out.push_back({f, oracle.classify(f, rm ? &*rm : nullptr)});
    emit(to_json(out), c);
    return 0;
}

int cmd_ears(const std::string& path, bool normalize, const Common& c) {
    const Multigraph h = load_edge_list(path);
    EarDecomposition d = is_two_connected(h) ? two_connected_ear_decomposition(h) : ear_decomposition(h);
    if (normalize) d = normalize_ear_decomposition(d);
    emit(to_json(d), c);
    return 0;
}

struct ItemResult {
    bool edmonds_ok = true, h_perfect_ok = true, joined_ok = true, skipped = false;
};

int cmd_verify(int max_edges, bool edmonds, bool h_perfect, bool joined, int random_count, int random_nodes, const Common& c) {
    if (!edmonds && !h_perfect && !joined) edmonds = h_perfect = joined = true;
    if (max_edges > c.hull_nodes) throw InputError("--max-edges above the hull limit " + std::to_string(c.hull_nodes));
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Multigraph> corpus = connected_multigraphs(max_edges);
    if (random_count > 0) {
        std::mt19937_64 rng(c.seed);
        while (random_count > 0) {
            Multigraph h = random_multigraph(random_nodes, 0.4, 2, rng);
            if (h.edge_count() == 0 || h.edge_count() > c.hull_nodes || !is_connected(h)) continue;
            corpus.push_back(std::move(h));
            --random_count;
        }
    }
    std::vector<ItemResult> results(corpus.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed_hard{false};
    std::string hard_error;
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            try {
                const Multigraph& h = corpus[i];
                ItemResult& r = results[i];
                const Multigraph lg = line_graph(h).graph;
                if (edmonds) r.edmonds_ok = verify_edmonds_description(h, limits_of(c)).pass;
                if (h_perfect || joined) {
                    const bool decided = is_h_perfect_line(h, DecideOptions{c.max_nodes});
                    if (h_perfect) r.h_perfect_ok = is_h_perfect_by_facets(lg, limits_of(c)) == decided;
                    if (joined) r.joined_ok = is_joined_a_perfect(lg, limits_of(c)) == decided;
                }
            } catch (const std::exception& e) {
                if (!failed_hard.exchange(true)) hard_error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(1, c.jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed_hard) throw std::runtime_error(hard_error);

    Json summary{{"graphs", corpus.size()}, {"max_edges", max_edges}};
    bool all_ok = true;
    auto tally = [&](const char* name, bool enabled, bool ItemResult::*field) {
        if (!enabled) return;
        std::size_t pass = 0;
        Json first = nullptr;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (results[i].*field) {
                ++pass;
            } else if (first.is_null()) {
                first = format_edge_list(corpus[i]);
            }
        }
        all_ok = all_ok && pass == corpus.size();
        summary[name] = Json{{"pass", pass}, {"fail", corpus.size() - pass}, {"first_counterexample", first}};
    };
    tally("edmonds", edmonds, &ItemResult::edmonds_ok);
    tally("h_perfect", h_perfect, &ItemResult::h_perfect_ok);
    tally("joined_a", joined, &ItemResult::joined_ok);
    summary["timing"] = Json{{"total_ms", ms_since(t0)}};
    emit(summary, c);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Line graph N+-perfection: certificates and stable set polytope checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--max-nodes", common.max_nodes, "Root node limit for the subset scan")->capture_default_str();
    app.add_option("--hull-limit", common.hull_nodes, "Node limit for facet enumeration")->capture_default_str();
    app.add_option("--jobs", common.jobs, "Worker threads for verify")->capture_default_str();
    app.add_flag("--json", common.compact, "Compact single-line JSON");
    app.add_option("--seed", common.seed, "Seed for randomized corpora")->capture_default_str();

    FamilySpec spec;
    std::string out;
    auto* gen = app.add_subcommand("generate", "Write a named graph as an edge list");
    gen->add_option("family", spec.kind, "Family name")->required()->check(CLI::IsMember(family_names()));
    gen->add_option("--k", spec.k, "Hole parameter (2k+1 nodes) or antiweb k")->capture_default_str();
    gen->add_option("--n", spec.n, "Antiweb/web node count")->capture_default_str();
    gen->add_option("--span", spec.span, "Hole distance between attachment nodes")->capture_default_str();
    gen->add_option("--ear-length", spec.ear_length, "Length of the attached path")->capture_default_str();
    gen->add_option("-o,--output", out, "Output file (default stdout)");

    std::string root_path;
    bool with_facets = false;
    auto* cert = app.add_subcommand("certify", "Decide N+-perfection of L(root) and report a certificate");
    cert->add_option("root", root_path, "Root multigraph edge list")->required();
    cert->add_flag("--facets", with_facets, "Include the classified facet table");

    std::string graph_path, facet_root;
    bool line_only = false;
    auto* fac = app.add_subcommand("facets", "Facets of the stable set polytope, classified");
    fac->add_option("graph", graph_path, "Graph edge list (defaults to L(root))");
    fac->add_option("--root", facet_root, "Root graph; enables hypomatchable line rank tags");
    fac->add_flag("--line-graph-only", line_only, "Ignore the root when classifying");

    std::string ears_path;
    bool normalize = false;
    auto* ears = app.add_subcommand("ears", "Ear decomposition of a hypomatchable graph");
    ears->add_option("graph", ears_path, "Edge list")->required();
    ears->add_flag("--normalize", normalize, "Rewrite so the initial cycle has at least five nodes");

    int max_edges = 7, random_count = 0, random_nodes = 7;
    bool edmonds = false, h_perfect = false, joined = false;
    auto* ver = app.add_subcommand("verify", "Cross-check decisions against the facet oracle on a corpus");
    ver->add_option("--max-edges", max_edges, "Enumerate connected multigraphs up to this many edges")->capture_default_str();
    ver->add_flag("--edmonds", edmonds, "Every facet is nonnegativity, clique or hypomatchable line rank");
    ver->add_flag("--h-perfect,--corollary2", h_perfect, "Decision agrees with h-perfection of the facet list");
    ver->add_flag("--joined-a", joined, "Joined a-perfection agrees with the decision");
    ver->add_option("--random", random_count, "Extra random connected multigraphs")->capture_default_str();
    ver->add_option("--random-nodes", random_nodes, "Node count of the random graphs")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_generate(spec, out);
        if (*cert) return cmd_certify(root_path, with_facets, common);
        if (*fac) return cmd_facets(graph_path, facet_root, line_only, common);
        if (*ears) return cmd_ears(ears_path, normalize, common);
        if (*ver) return cmd_verify(max_edges, edmonds, h_perfect, joined, random_count, random_nodes, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
