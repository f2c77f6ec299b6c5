// tcc: command-line front end. Exit codes: 0 ok / yes, 1 no (decision queries, failed
// verification or census), 2 invalid input, 3 capacity or budget exceeded.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcc/analysis.hpp"
#include "tcc/components.hpp"
#include "tcc/errors.hpp"
#include "tcc/format.hpp"
#include "tcc/pathgraphs.hpp"
#include "tcc/reachability.hpp"
#include "tcc/reductions.hpp"

namespace {

using namespace tcc;

enum Exit { kOk = 0, kNo = 1, kInvalid = 2, kCapacity = 3 };

bool is_cover_text(const std::string& text) {
    const auto lines = tokenize_lines(text);
    return !lines.empty() && lines[0][0] == "tpc";
}

/// Graph from either a .tg or a .tpc file (header decides).
TemporalGraph load_graph(const std::string& path, PathCover* cover_out = nullptr) {
    const std::string text = read_text_file(path);
    if (is_cover_text(text)) {
        PathCover cover = parse_tpc(text);
        TemporalGraph g = validate_cover(cover);
        if (cover_out) *cover_out = std::move(cover);
        return g;
    }
    return parse_tg(text);
}

/// "dir/K3.edg" + "ctcc6" + ".tpc" -> "dir/K3.ctcc6.tpc"
std::string derived_name(const std::string& input, const std::string& tag, const std::string& ext) {
    std::filesystem::path p(input);
    return (p.parent_path() / (p.stem().string() + "." + tag + ext)).string();
}

void write_outputs(const std::string& primary, const std::string& contents, const std::string& cert_path,
                   const ReductionCertificate& cert) {
    write_text_file(primary, contents);
    write_text_file(cert_path, certificate_to_json(cert));
    std::cout << "wrote " << primary << "\nwrote " << cert_path << "\n";
}

struct Options {
    // shared
    std::string input, output, cert, graph, set, order, csv, labels = "proper", map;
    std::vector<std::string> inputs;
    unsigned threads = 1;
    bool open = false, closed = false, oracle = false, strong = false, matrix = false, undirected = false,
         nonstrict = false;
    std::int64_t decide = -1;
    std::uint64_t budget = ClosedSearchOptions{}.node_budget;
    std::size_t strong_budget = kDefaultStrongBudget;
    std::int64_t source = -1;
    std::size_t n = 0, k = 0, hops = 0, trials = 0, s = 3;
    std::uint64_t seed = 0;
    std::string witness;
};

int run_solve(const Options& o) {
    const TemporalGraph g = load_graph(o.input);
    SolveReport r;
    if (o.open) {
        r = o.oracle ? oracle_max_open(g) : max_open_tcc(g, o.threads);
    } else {
        r = o.oracle ? oracle_max_closed(g) : max_closed_tcc(g, {o.budget, o.threads});
    }
    std::cout << format_report(r);
    if (o.decide >= 0) {
        const bool yes = r.size >= static_cast<std::size_t>(o.decide);
        std::cout << "decision=" << (yes ? "yes" : "no") << "\n";
        return yes ? kOk : kNo;
    }
    return kOk;
}

int run_check(const Options& o) {
    const TemporalGraph g = load_graph(o.input);
    const auto X = parse_vertex_list(o.set);
    bool connected, maximal;
    if (o.open) {
        connected = is_open_connected(g, X);
        maximal = connected && is_maximal_open(g, X);
    } else {
        connected = is_closed_connected(g, X);
        maximal = connected &&
                  is_maximal_closed(g, X, o.strong ? ClosedMaximality::strong : ClosedMaximality::weak, o.strong_budget);
    }
    std::cout << "connected=" << (connected ? "true" : "false") << " maximal=" << (maximal ? "true" : "false") << "\n";
    return connected && maximal ? kOk : kNo;
}

int run_reach(const Options& o) {
    const TemporalGraph g = load_graph(o.input);
    if (o.matrix) {
        const ReachMatrix m = reach_matrix(g, o.threads);
        for (Vertex u = 0; u < m.size(); ++u) {
            std::string row;
            for (Vertex v = 0; v < m.size(); ++v) row += m.reaches(u, v) ? '1' : '0';
            std::cout << row << "\n";
        }
        return kOk;
    }
    if (o.source < 0) throw ValidationError("reach needs --source or --matrix");
    const auto arrival = earliest_arrival(g, static_cast<Vertex>(o.source));
    for (Vertex v = 0; v < arrival.size(); ++v) {
        if (arrival[v] == kUnreached) continue;
        std::cout << v << ' ' << (arrival[v] == kStart ? std::string("start") : std::to_string(arrival[v])) << "\n";
    }
    return kOk;
}

int run_verify(const Options& o) {
    PathCover cover;
    const TemporalGraph g = load_graph(o.input, &cover);
    const bool have_cover = cover.n > 0;
    const ReductionCertificate cert = certificate_from_json(read_text_file(o.cert));
    const VerificationReport report = verify_certificate(g, cert, have_cover ? &cover : nullptr, o.threads);
    for (const auto& c : report.claims) {
        std::cout << (c.passed ? "pass " : "FAIL ") << c.name;
        if (!c.passed) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    return report.all_passed() ? kOk : kNo;
}

std::optional<std::vector<Vertex>> parse_witness(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_vertex_list(text);
}

int run_gen(const std::string& which, const Options& o) {
    if (which == "kpath") {
        if (o.labels != "proper" && o.labels != "uniform") throw ValidationError("--labels must be proper or uniform");
        const PathCover c = random_kpath(o.n, o.k, o.hops, o.seed,
                                         o.labels == "proper" ? LabelModel::proper : LabelModel::uniform,
                                         GraphFlags{!o.undirected, !o.nonstrict});
        validate_cover(c);
        if (o.output.empty()) std::cout << serialize_tpc(c);
        else {
            write_text_file(o.output, serialize_tpc(c));
            std::cout << "wrote " << o.output << "\n";
        }
        return kOk;
    }
    const SourceGraph h = read_edg_file(o.graph);
    if (which == "semaphore") {
        const auto out = gen_semaphore(h, o.undirected);
        const std::string path = o.output.empty() ? derived_name(o.graph, "semaphore", ".tg") : o.output;
        write_outputs(path, serialize_tg(out.graph), o.cert.empty() ? path + ".cert.json" : o.cert, out.cert);
    } else if (which == "ctcc6") {
        const auto out = gen_ctcc_6path(h, o.s, parse_witness(o.witness), o.undirected);
        const std::string path = o.output.empty() ? derived_name(o.graph, "ctcc6", ".tpc") : o.output;
        write_outputs(path, serialize_tpc(out.cover), o.cert.empty() ? path + ".cert.json" : o.cert, out.cert);
    } else {
        const auto out = gen_mcc_tw9(h, o.undirected, parse_witness(o.witness));
        const std::string path = o.output.empty() ? derived_name(o.graph, "mcctw", ".tg") : o.output;
        write_outputs(path, serialize_tg(out.graph), o.cert.empty() ? path + ".cert.json" : o.cert, out.cert);
    }
    return kOk;
}

int run_compose(bool chained, const Options& o) {
    std::vector<TemporalGraph> parts;
    for (const auto& p : o.inputs) parts.push_back(load_graph(p));
    if (chained) {
        const auto out = compose_chained(parts, o.s);
        write_outputs(o.output, serialize_tpc(out.cover), o.cert.empty() ? o.output + ".cert.json" : o.cert, out.cert);
    } else {
        const auto out = compose_disjoint(parts, o.s);
        write_outputs(o.output, serialize_tg(out.graph), o.cert.empty() ? o.output + ".cert.json" : o.cert, out.cert);
    }
    return kOk;
}

int run_bridges(const Options& o) {
    const PathCover c = read_tpc_file(o.input);
    validate_cover(c);
    std::cout << "# path position first second\n";
    for (const auto& b : find_bridges(c))
        std::cout << b.path_index << ' ' << b.position << ' ' << b.first << ' ' << b.second << "\n";
    return kOk;
}

int run_strip(const Options& o) {
    const StrippedGraph s = remove_bridges(read_tpc_file(o.input));
    write_text_file(o.output, serialize_tg(s.graph));
    std::cout << "wrote " << o.output << " (" << s.graph.vertex_count() << " vertices)\n";
    if (!o.map.empty()) {
        std::ostringstream os;
        os << "# old new\n";
        for (std::size_t v = 0; v < s.old_to_new.size(); ++v) os << v << ' ' << s.old_to_new[v] << "\n";
        write_text_file(o.map, os.str());
        std::cout << "wrote " << o.map << "\n";
    }
    return kOk;
}

int run_monotone(const Options& o) {
    const PathCover c = read_tpc_file(o.input);
    validate_cover(c);
    const bool ok = verify_monotone(c, parse_vertex_list(o.order));
    std::cout << "monotone=" << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kNo;
}

int run_stats_vc(const Options& o) {
    if (o.labels != "proper" && o.labels != "uniform") throw ValidationError("--labels must be proper or uniform");
    CensusOptions opts;
    opts.labels = o.labels == "proper" ? LabelModel::proper : LabelModel::uniform;
    opts.flags = GraphFlags{!o.undirected, !o.nonstrict};
    opts.threads = o.threads;
    std::vector<CensusRow> rows;
    try {
        rows = vc_census(o.n, o.k, o.hops ? o.hops : o.n, o.trials, o.seed, opts);
    } catch (const std::logic_error& e) {
        std::cerr << "tcc: bound violated: " << e.what() << "\n";
        return kNo;
    }
    std::size_t worst = 0;
    std::uint64_t worst_nodes = 0;
    for (const auto& r : rows) {
        worst = std::max(worst, r.component_count);
        worst_nodes = std::max(worst_nodes, r.nodes);
    }
    std::cout << "trials=" << rows.size() << " bound=" << rows.front().bound << " max_components=" << worst
              << " max_nodes=" << worst_nodes << " node_limit=" << 2 * rows.front().bound - 1 << "\n";
    if (!o.csv.empty()) {
        write_text_file(o.csv, census_csv(rows));
        std::cout << "wrote " << o.csv << "\n";
    }
    return kOk;
}

int run_stats_graph(const Options& o) {
    const TemporalGraph g = load_graph(o.input);
    const GraphStats st = graph_stats(g);
    std::cout << "vertices=" << g.vertex_count() << "\ntemporal_edges=" << g.edges().size()
              << "\nlabels=" << st.lifetime() << "\nmin_label=" << st.min_label << "\nmax_label=" << st.max_label
              << "\nmax_temporal_degree=" << st.max_temporal_degree << "\nmax_static_degree=" << st.max_static_degree
              << "\nfootprint_components=" << st.footprint_component_count << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal connected components toolkit"};
    app.require_subcommand(1);
    Options o;

    auto threads = [&](CLI::App* c) { c->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u)); };
    auto input = [&](CLI::App* c, const char* what) { c->add_option("--input", o.input, what)->required(); };

    auto* gen = app.add_subcommand("gen", "generate instances")->require_subcommand(1);
    auto* kpath = gen->add_subcommand("kpath", "random k-path cover");
    kpath->add_option("--n", o.n)->required();
    kpath->add_option("--k", o.k)->required();
    kpath->add_option("--hops", o.hops)->required();
    kpath->add_option("--seed", o.seed)->required();
    kpath->add_option("--labels", o.labels, "proper|uniform");
    kpath->add_option("--output", o.output, ".tpc path (default stdout)");
    kpath->add_flag("--undirected", o.undirected);
    kpath->add_flag("--nonstrict", o.nonstrict);
    for (const char* name : {"semaphore", "ctcc6", "mcctw"}) {
        auto* c = gen->add_subcommand(name, std::string(name) + " construction");
        c->add_option("--graph", o.graph, ".edg source graph")->required();
        c->add_option("--output", o.output);
        c->add_option("--cert", o.cert, "certificate path (default <output>.cert.json)");
        c->add_flag("--undirected", o.undirected);
        if (std::string(name) == "ctcc6") c->add_option("--s", o.s)->required();
        if (std::string(name) != "semaphore") c->add_option("--witness", o.witness, "clique, e.g. 0,1,2");
    }

    auto* compose = app.add_subcommand("compose", "compose instances")->require_subcommand(1);
    for (const char* name : {"disjoint", "chain"}) {
        auto* c = compose->add_subcommand(name);
        c->add_option("--inputs", o.inputs)->required()->expected(1, -1);
        c->add_option("--s", o.s)->required();
        c->add_option("--output", o.output)->required();
        c->add_option("--cert", o.cert);
    }

    auto* reach = app.add_subcommand("reach", "earliest arrival or reach matrix");
    input(reach, ".tg or .tpc");
    reach->add_option("--source", o.source);
    reach->add_flag("--matrix", o.matrix);
    threads(reach);

    auto* solve = app.add_subcommand("solve", "maximum open or closed component");
    input(solve, ".tg or .tpc");
    auto* so = solve->add_flag("--open", o.open);
    auto* sc = solve->add_flag("--closed", o.closed);
    so->excludes(sc);
    solve->add_flag("--oracle", o.oracle, "use the brute-force oracle");
    solve->add_option("--decide", o.decide, "exit 0 iff size >= s");
    solve->add_option("--budget", o.budget, "closed search node budget");
    threads(solve);

    auto* en = app.add_subcommand("enum", "all maximal open components");
    input(en, ".tg or .tpc");
    bool show_stats = false;
    en->add_flag("--stats", show_stats, "search statistics on stderr");
    threads(en);

    auto* check = app.add_subcommand("check", "test a vertex set");
    input(check, ".tg or .tpc");
    check->add_option("--set", o.set)->required();
    auto* co = check->add_flag("--open", o.open);
    auto* cc = check->add_flag("--closed", o.closed);
    co->excludes(cc);
    check->add_flag("--strong", o.strong, "exhaustive closed maximality");
    check->add_option("--budget", o.strong_budget, "candidate budget for --strong");

    auto* bridges = app.add_subcommand("bridges", "list bridges of a cover");
    input(bridges, ".tpc");
    auto* strip = app.add_subcommand("strip-bridges", "delete bridge vertices");
    input(strip, ".tpc");
    strip->add_option("--output", o.output)->required();
    strip->add_option("--map", o.map, "write old->new vertex map");
    auto* mono = app.add_subcommand("check-monotone", "paths ascend or descend an order");
    input(mono, ".tpc");
    mono->add_option("--order", o.order)->required();

    auto* verify = app.add_subcommand("verify", "check a certificate");
    input(verify, ".tg or .tpc");
    verify->add_option("--cert", o.cert)->required();
    threads(verify);

    auto* stats = app.add_subcommand("stats", "statistics")->require_subcommand(1);
    auto* vc = stats->add_subcommand("vc", "component-count census");
    vc->add_option("--n", o.n)->required();
    vc->add_option("--k", o.k)->required();
    vc->add_option("--hops", o.hops, "hops per path (default n)");
    vc->add_option("--trials", o.trials)->required();
    vc->add_option("--seed", o.seed)->required();
    vc->add_option("--labels", o.labels, "proper|uniform");
    vc->add_option("--csv", o.csv);
    vc->add_flag("--undirected", o.undirected);
    vc->add_flag("--nonstrict", o.nonstrict);
    threads(vc);
    auto* sg = stats->add_subcommand("graph", "graph statistics");
    input(sg, ".tg or .tpc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if ((*solve || *check) && !o.open && !o.closed) throw ValidationError("choose --open or --closed");
        if (*solve) return run_solve(o);
        if (*check) return run_check(o);
        if (*reach) return run_reach(o);
        if (*verify) return run_verify(o);
        if (*en) {
            EnumerationStats st;
            const ComponentFamily f = enumerate_maximal_open(load_graph(o.input), &st, o.threads);
            std::cout << format_family(f);
            if (show_stats)
                std::cerr << "nodes=" << st.nodes << " leaves=" << st.leaves << " maximal_leaves=" << st.maximal_leaves
                          << "\n";
            return kOk;
        }
        for (auto* c : gen->get_subcommands())
            if (*c) return run_gen(c->get_name(), o);
        if (*compose) return run_compose(compose->got_subcommand("chain"), o);
        if (*bridges) return run_bridges(o);
        if (*strip) return run_strip(o);
        if (*mono) return run_monotone(o);
        if (*vc) return run_stats_vc(o);
        if (*sg) return run_stats_graph(o);
    } catch (const CapacityError& e) {
        std::cerr << "tcc: " << e.what() << "\n";
        if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e))
            std::cerr << "tcc: lower bound size=" << b->lower_bound().size << " "
                      << format_set(b->lower_bound().best_set) << "\n";
        return kCapacity;
    } catch (const ValidationError& e) {
        std::cerr << "tcc: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
