// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tcc/analysis.hpp"
#include "tcc/components.hpp"
#include "tcc/pathgraphs.hpp"
#include "tcc/reductions.hpp"

using namespace tcc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;  // keep the first counterexample
        ok = false;
    }
};

using Masks = std::set<std::uint32_t>;

SourceGraph random_source(Rng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin(num, den)) es.emplace_back(u, v);
    return make_source_graph(n, es);
}

std::string str(std::span<const Vertex> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// 1 ---------------------------------------------------------------------------
Outcome open_equivalence() {
    Outcome o;
    Rng rng(1);
    std::size_t sets = 0;
    for (int i = 0; i < 200; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        const std::size_t n = 2 + rng.below(13);
        const auto g = oracle::random_graph(rng, n, rng.below(3 * n + 1), 1 + static_cast<Time>(rng.below(2 * n)), flags);
        const auto fam = enumerate_maximal_open(g);
        const auto ref = oracle::maximal_cliques_by_subsets(oracle::compat_from_reach(oracle::relaxation_reach(g)));
        sets += ref.size();
        if (fam.sets != ref) o.fail("graph " + std::to_string(i) + " differs");
    }
    o.detail = o.ok ? "200 graphs, 4 modes, " + std::to_string(sets) + " maximal sets identical" : o.detail;
    return o;
}

// 2 ---------------------------------------------------------------------------
Outcome closed_equivalence() {
    Outcome o;
    Rng rng(2);
    std::map<std::size_t, int> sizes;
    for (int i = 0; i < 200; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        const std::size_t n = 2 + rng.below(11);
        const auto g = oracle::random_graph(rng, n, rng.below(4 * n + 1), 1 + static_cast<Time>(rng.below(2 * n)), flags);
        const auto a = max_closed_tcc(g).size, b = oracle_max_closed(g).size;
        ++sizes[b];
        if (a != b) o.fail("graph " + std::to_string(i) + ": search " + std::to_string(a) + " vs oracle " + std::to_string(b));
    }
    if (o.ok) {
        o.detail = "200 graphs equal; sizes";
        for (auto [s, c] : sizes) o.detail += " " + std::to_string(s) + ":" + std::to_string(c);
    }
    return o;
}

// 3 ---------------------------------------------------------------------------
Outcome census() {
    Outcome o;
    std::ostringstream d;
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{10, 2}, {14, 2}, {12, 3}}) {
        try {
            const auto rows = vc_census(n, k, n, 50, 1000 + n * 10 + k);
            std::size_t worst = 0;
            std::uint64_t worst_nodes = 0, bound = 0;
            for (const auto& r : rows) {
                bound = r.bound;
                if (r.component_count > r.bound || r.nodes > 2 * r.bound - 1)
                    o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " seed " + std::to_string(r.seed));
                worst = std::max(worst, r.component_count);
                worst_nodes = std::max(worst_nodes, r.nodes);
            }
            d << " (" << n << "," << k << "): max components " << worst << ", max nodes " << worst_nodes << " <= "
              << 2 * bound - 1 << ", bound " << bound << ";";
        } catch (const std::logic_error& e) {
            o.fail(e.what());
        }
    }
    if (o.ok) o.detail = "150 trials within bound;" + d.str();
    return o;
}

// 4 ---------------------------------------------------------------------------
Outcome semaphore_equivalence() {
    Outcome o;
    std::vector<std::pair<std::size_t, std::vector<std::pair<Vertex, Vertex>>>> catalogue;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& es : oracle::nonisomorphic_graphs(n)) catalogue.emplace_back(n, std::move(es));
    const std::size_t classes = catalogue.size();
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto h = random_source(rng, 7, 1 + rng.below(3), 4);
        catalogue.emplace_back(7, h.edges);
    }
    std::size_t checks = 0, yes = 0;
    for (const auto& [n, es] : catalogue) {
        if (n < 3) continue;              // no target s in 3..n
        const auto omega = oracle::clique_number(n, es);
        if (es.empty()) continue;         // generator precondition; clique number 1 < 3 for every s
        const auto gen = gen_semaphore(make_source_graph(n, es));
        const auto compat = oracle::compat_from_reach(oracle::relaxation_reach(gen.graph));
        for (std::size_t s = 3; s <= n; ++s) {
            ++checks;
            const bool lhs = omega >= s, rhs = oracle::has_clique(compat, s);
            yes += lhs;
            if (lhs != rhs) o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + " mismatch");
        }
    }
    if (o.ok)
        o.detail = std::to_string(classes) + " isomorphism classes + 100 random n=7; " + std::to_string(checks) +
                   " (H,s) pairs agree, " + std::to_string(yes) + " yes";
    return o;
}

// 5 ---------------------------------------------------------------------------
Outcome six_path() {
    Outcome o;
    std::size_t instances = 0, yes = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
        std::vector<std::pair<Vertex, Vertex>> slots;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint32_t mask = 1; mask < (1u << slots.size()); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> es;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) es.push_back(slots[i]);
            const auto h = make_source_graph(n, es);
            const auto omega = oracle::clique_number(n, es);
            std::size_t stripped_max = 0;
            for (std::size_t s = 3; s <= 4; ++s) {
                const auto gen = gen_ctcc_6path(h, s);
                const std::size_t target = s * (n - 1) + 2 * es.size();
                ++instances;
                if (gen.cover.size() != 6) o.fail("cover with " + std::to_string(gen.cover.size()) + " paths");
                if (stripped_max == 0) stripped_max = oracle_max_closed(remove_bridges(gen.cover).graph).size;
                const bool lhs = omega >= s;
                const bool rhs = stripped_max >= target;
                yes += lhs;
                if (lhs != rhs)
                    o.fail("n=" + std::to_string(n) + " m=" + std::to_string(es.size()) + " s=" + std::to_string(s) +
                           ": clique " + std::to_string(omega) + ", stripped max closed " +
                           std::to_string(stripped_max) + " vs " + std::to_string(target));
                if (lhs) {
                    if (gen.cert.expected_size != target) o.fail("expected size differs from formula");
                    if (!is_closed_connected(gen.graph, gen.cert.expected_component))
                        o.fail("expected component not closed-connected");
                }
            }
        }
    }
    if (o.ok)
        o.detail = std::to_string(instances) + " (H,s) instances on n in {3,4}: 6 paths each, equivalence holds (" +
                   std::to_string(yes) + " yes)";
    return o;
}

// 6 ---------------------------------------------------------------------------
Outcome tw9_battery() {
    Outcome o;
    Rng rng(6);
    const std::vector<std::string> required{"C1-incidence",   "C2-vertex-vertex",           "C3-vertex-edge",
                                            "C4-identity",    "C5-edge-edge",               "separator-universality",
                                            "within-set-incompatibility", "deletion-structure", "expected-open",
                                            "expected-closed", "expected-meta-size"};
    std::size_t runs = 0;
    for (int i = 0; i < 24; ++i) {
        const std::size_t k = 2 + i % 2;
        std::vector<std::vector<Vertex>> classes;
        Vertex next = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t size = 1 + rng.below(3);
            classes.emplace_back();
            for (std::size_t j = 0; j < size; ++j) classes.back().push_back(next++);
        }
        std::vector<Vertex> colour(next);
        for (std::size_t c = 0; c < k; ++c)
            for (Vertex v : classes[c]) colour[v] = static_cast<Vertex>(c);
        // plant a multicoloured clique, then add random cross-class edges
        std::vector<Vertex> witness;
        for (const auto& cl : classes) witness.push_back(cl[rng.below(cl.size())]);
        std::set<std::pair<Vertex, Vertex>> es;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) es.insert({witness[a], witness[b]});
        for (Vertex u = 0; u < next; ++u)
            for (Vertex v = u + 1; v < next; ++v)
                if (colour[u] != colour[v] && rng.coin(1, 2)) es.insert({u, v});
        const auto h = make_source_graph(next, {es.begin(), es.end()}, classes);
        for (bool und : {false, true}) {
            ++runs;
            const auto gen = gen_mcc_tw9(h, und, witness);
            const auto rep = verify_certificate(gen.graph, gen.cert);
            const std::string tag = "instance " + std::to_string(i) + (und ? " undirected" : " directed");
            for (const auto& c : rep.claims)
                if (!c.passed) o.fail(tag + ": " + c.name + " " + c.detail);
            for (const auto& r : required)
                if (!rep.find(r)) o.fail(tag + ": claim " + r + " missing");
            if (gen.cert.params.at("expected_meta_size") != static_cast<std::int64_t>(k + k * (k - 1) + 8))
                o.fail(tag + ": meta size");
        }
    }
    if (o.ok) o.detail = std::to_string(runs) + " certificate runs (12 k=2, 12 k=3, both variants), every claim passes";
    return o;
}

// 7 ---------------------------------------------------------------------------
Outcome bridge_lemmas() {
    Outcome o;
    Rng rng(7);
    std::size_t bridges = 0, with_bridges = 0, closed_total = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 6 + rng.below(15);
        const std::size_t k = 1 + rng.below(3);
        const std::size_t hops = 2 + rng.below(n - 1);
        const GraphFlags flags{true, i % 2 == 0};
        const auto cover = random_kpath(n, k, hops, 700 + i, i % 3 ? LabelModel::proper : LabelModel::uniform, flags);
        const auto g = validate_cover(cover);
        const auto found = find_bridges(cover);
        bridges += found.size();
        with_bridges += !found.empty();
        std::uint32_t bridge_mask = 0;
        for (const auto& b : found) bridge_mask |= (1u << b.first) | (1u << b.second);
        const Masks before = oracle::closed_sets(g);
        closed_total += before.size();
        for (std::uint32_t m : before)
            if (m & bridge_mask) o.fail("cover " + std::to_string(i) + ": bridge vertex in a closed set");
        if (bridge_mask == (n >= 32 ? ~0u : (1u << n) - 1)) continue;  // nothing left to compare
        const auto stripped = remove_bridges(cover);
        Masks after_mapped;
        for (std::uint32_t m : oracle::closed_sets(stripped.graph)) {
            std::uint32_t back = 0;
            for (Vertex v = 0; v < n; ++v)
                if (stripped.old_to_new[v] >= 0 && (m >> stripped.old_to_new[v] & 1)) back |= 1u << v;
            after_mapped.insert(back);
        }
        if (after_mapped != before) o.fail("cover " + std::to_string(i) + ": closed family changed by removal");
    }
    if (o.ok)
        o.detail = "100 directed covers (<= 20 vertices), " + std::to_string(with_bridges) + " with bridges, " +
                   std::to_string(bridges) + " bridges, " + std::to_string(closed_total) +
                   " nontrivial closed sets preserved";
    return o;
}

// 8 ---------------------------------------------------------------------------
TemporalGraph random_part(Rng& rng, std::size_t n, std::size_t m, Time max_label, GraphFlags flags) {
    for (;;) {
        auto g = oracle::random_graph(rng, n, m, max_label, flags);
        if (g.edges().size() == m) return g;
    }
}

std::size_t part_of(const std::string& role) {
    if (role.rfind("part.", 0) != 0) return 0;
    return std::stoul(role.substr(5));
}

void check_confined(Outcome& o, const std::string& tag, const ReductionCertificate& cert, const Masks& closed,
                    const ComponentFamily& open) {
    auto confined = [&](std::span<const Vertex> s) {
        const std::size_t p = part_of(cert.role_map[s[0]]);
        if (p == 0) return false;
        for (Vertex v : s)
            if (part_of(cert.role_map[v]) != p) return false;
        return true;
    };
    for (const auto& s : open.sets)
        if (s.size() >= 3 && !confined(s)) o.fail(tag + ": open set " + str(s) + " spans parts");
    for (std::uint32_t m : closed) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 32; ++v)
            if (m >> v & 1) s.push_back(v);
        if (s.size() >= 3 && !confined(s)) o.fail(tag + ": closed set " + str(s) + " spans parts");
    }
}

Outcome compositions() {
    Outcome o;
    Rng rng(8);
    std::size_t disjoint_runs = 0, chain_runs = 0;
    for (int i = 0; i < 20; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        std::vector<TemporalGraph> parts;
        const std::size_t t = 2 + rng.below(2);
        std::size_t open_max = 0, closed_max = 0;
        for (std::size_t p = 0; p < t; ++p) {
            const std::size_t n = 3 + rng.below(4);
            parts.push_back(random_part(rng, n, 2 * n, 4, flags));
            open_max = std::max(open_max, oracle_max_open(parts.back()).size);
            closed_max = std::max(closed_max, oracle_max_closed(parts.back()).size);
        }
        const auto gen = compose_disjoint(parts, 3);
        const std::string tag = "disjoint " + std::to_string(i);
        ++disjoint_runs;
        if (!verify_certificate(gen.graph, gen.cert).all_passed()) o.fail(tag + ": certificate");
        check_confined(o, tag, gen.cert, oracle::closed_sets(gen.graph), enumerate_maximal_open(gen.graph));
        if (max_open_tcc(gen.graph).size != open_max) o.fail(tag + ": open max changed");
        if (max_closed_tcc(gen.graph).size != closed_max) o.fail(tag + ": closed max changed");
    }
    for (int i = 0; i < 20; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        // at most 3*4 part vertices + 2*5 connectors, within the 32-bit oracle masks
        const std::size_t n = 3 + rng.below(2);
        const std::size_t m = n + rng.below(2);
        const std::size_t t = 2 + rng.below(2);
        std::vector<TemporalGraph> parts;
        std::size_t open_max = 0, closed_max = 0;
        for (std::size_t p = 0; p < t; ++p) {
            parts.push_back(random_part(rng, n, m, 2, flags));
            open_max = std::max(open_max, oracle_max_open(parts.back()).size);
            closed_max = std::max(closed_max, oracle_max_closed(parts.back()).size);
        }
        const auto gen = compose_chained(parts, 3);
        const std::string tag = "chain " + std::to_string(i);
        ++chain_runs;
        if (gen.cover.size() != m) o.fail(tag + ": " + std::to_string(gen.cover.size()) + " paths, want " + std::to_string(m));
        if (validate_cover(gen.cover) != gen.graph) o.fail(tag + ": cover does not induce the graph");
        if (!verify_certificate(gen.graph, gen.cert, &gen.cover).all_passed()) o.fail(tag + ": certificate");
        // labels: part i at its own labels + (2m+2)(i-1); connectors inside the gap after part i
        const auto shift = static_cast<Time>(2 * m + 2);
        for (const auto& e : gen.graph.edges()) {
            const auto pt = part_of(gen.cert.role_map[e.tail]), ph = part_of(gen.cert.role_map[e.head]);
            if (pt && ph) {
                if (pt != ph) o.fail(tag + ": edge between parts");
                const Time local = e.time - shift * static_cast<Time>(pt - 1);
                if (local != 1 && local != 2) o.fail(tag + ": part label " + std::to_string(e.time));
            } else {
                const std::size_t p = pt ? pt : ph;
                const auto& conn = gen.cert.role_map[pt ? e.head : e.tail];
                // conn.i.j: fed by part i at shift*(i-1)+2+j, feeds part i+1 at shift*(i-1)+2+m+j
                std::size_t ci = 0, cj = 0;
                std::sscanf(conn.c_str(), "conn.%zu.%zu", &ci, &cj);
                const Time base = shift * static_cast<Time>(ci - 1) + 2;
                Time want = -1;
                if (p == ci && (!flags.directed || pt)) want = base + static_cast<Time>(cj);
                if (p == ci + 1 && (!flags.directed || ph)) want = base + static_cast<Time>(m + cj);
                if (e.time != want) o.fail(tag + ": connector label " + std::to_string(e.time) + " want " + std::to_string(want));
            }
        }
        const auto closed = oracle::closed_sets(gen.graph);
        const auto open = enumerate_maximal_open(gen.graph);
        check_confined(o, tag, gen.cert, closed, open);
        for (const auto& s : open.sets)
            for (Vertex v : s)
                if (part_of(gen.cert.role_map[v]) == 0 && s.size() > 2) o.fail(tag + ": connector in a large set");
        const auto big_open = max_open_tcc(gen.graph).size, big_closed = max_closed_tcc(gen.graph).size;
        if (open_max >= 3 ? big_open != open_max : big_open > 2) o.fail(tag + ": open max changed");
        if (closed_max >= 3 ? big_closed != closed_max : big_closed > 2) o.fail(tag + ": closed max changed");
    }
    if (o.ok)
        o.detail = std::to_string(disjoint_runs) + " disjoint + " + std::to_string(chain_runs) +
                   " chained compositions: confinement, maxima, path count and label shifts hold";
    return o;
}

// 9 ---------------------------------------------------------------------------
Outcome determinism() {
    Outcome o;
    Rng rng(9);
    std::size_t trips = 0;
    for (int i = 0; i < 100; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        const auto g = oracle::random_graph(rng, 1 + rng.below(20), rng.below(60), 1 + static_cast<Time>(rng.below(30)), flags);
        const auto tg = serialize_tg(g);
        if (parse_tg(tg) != g || serialize_tg(parse_tg(tg)) != tg) o.fail("tg round trip");
        const auto c = random_kpath(6 + rng.below(10), 1 + rng.below(3), 1 + rng.below(6), i,
                                    i % 2 ? LabelModel::proper : LabelModel::uniform, flags);
        const auto tpc = serialize_tpc(c);
        if (parse_tpc(tpc) != c || serialize_tpc(parse_tpc(tpc)) != tpc) o.fail("tpc round trip");
        const std::size_t hn = 2 + rng.below(7);
        auto h = random_source(rng, hn, 1, 2);
        if (i % 2) {
            std::vector<std::vector<Vertex>> classes(2);
            for (Vertex v = 0; v < hn; ++v) classes[v % 2].push_back(v);
            h = make_source_graph(hn, h.edges, classes);
        }
        const auto edg = serialize_edg(h);
        if (parse_edg(edg) != h || serialize_edg(parse_edg(edg)) != edg) o.fail("edg round trip");
        trips += 3;
    }
    std::vector<ReductionCertificate> certs;
    const auto k3 = make_source_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    certs.push_back(gen_semaphore(k3).cert);
    certs.push_back(gen_ctcc_6path(k3, 3).cert);
    certs.push_back(gen_mcc_tw9(make_source_graph(3, {{0, 1}, {0, 2}}, {{0}, {1, 2}}), true).cert);
    for (const auto& c : certs) {
        const auto js = certificate_to_json(c);
        if (certificate_from_json(js) != c || certificate_to_json(certificate_from_json(js)) != js)
            o.fail("certificate round trip");
        ++trips;
    }
    std::size_t runs = 0;
    for (int i = 0; i < 30; ++i) {
        const GraphFlags flags{i % 2 == 0, (i / 2) % 2 == 0};
        const auto g = oracle::random_graph(rng, 10 + rng.below(20), 60, 25, flags);
        EnumerationStats s1, s8;
        const auto f1 = enumerate_maximal_open(g, &s1, 1), f8 = enumerate_maximal_open(g, &s8, 8);
        if (f1 != f8 || s1.nodes != s8.nodes) o.fail("enum differs across thread counts");
        if (max_open_tcc(g, 1).best_set != max_open_tcc(g, 8).best_set) o.fail("solve --open differs");
        if (max_closed_tcc(g, {500'000'000, 1}).best_set != max_closed_tcc(g, {500'000'000, 8}).best_set)
            o.fail("solve --closed differs");
        ++runs;
    }
    if (o.ok)
        o.detail = std::to_string(trips) + " round trips (tg, tpc, edg, json) exact; " + std::to_string(runs) +
                   " graphs give identical solve/enum output with 1 and 8 threads";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double limit_s;  // 0 = no limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, 10, open_equivalence},      {2, 60, closed_equivalence}, {3, 120, census},
        {4, 300, semaphore_equivalence}, {5, 600, six_path},          {6, 300, tw9_battery},
        {7, 120, bridge_lemmas},        {8, 60, compositions},       {9, 0, determinism},
    };
    bool all_ok = true;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_s == 0 || s < c.limit_s;
        const bool ok = o.ok && in_time;
        all_ok = all_ok && ok;
        char timing[96];
        if (c.limit_s > 0)
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, c.limit_s);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", s);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << o.detail << " (" << timing
                  << (in_time ? "" : ", over time") << ")" << std::endl;
    }
    return all_ok ? 0 : 1;
}
