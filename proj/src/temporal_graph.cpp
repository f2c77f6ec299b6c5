#include "tcc/temporal_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "tcc/errors.hpp"

namespace tcc {

namespace {

std::string triple(std::int64_t u, std::int64_t v, std::int64_t t) {
    std::ostringstream os;
    os << "(" << u << "," << v << "," << t << ")";
    return os.str();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

TemporalGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges, GraphFlags flags) {
    if (n < 1) throw ValidationError("graph must have at least one vertex");
    TemporalGraph g;
    g.n_ = n;
    g.flags_ = flags;
    g.edges_.reserve(edges.size());
    const auto limit = static_cast<std::int64_t>(n);
    for (const auto& e : edges) {
        if (e.tail < 0 || e.tail >= limit || e.head < 0 || e.head >= limit)
            throw ValidationError("endpoint out of range in edge " + triple(e.tail, e.head, e.time));
        if (e.tail == e.head) throw ValidationError("self-loop in edge " + triple(e.tail, e.head, e.time));
        if (e.time < 0) throw ValidationError("negative label in edge " + triple(e.tail, e.head, e.time));
        auto u = static_cast<Vertex>(e.tail);
        auto v = static_cast<Vertex>(e.head);
        if (!flags.directed && u > v) std::swap(u, v);
        g.edges_.push_back({u, v, e.time});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), chronological_less);
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw ValidationError("duplicate temporal edge " + triple(dup->tail, dup->head, dup->time));
    }
    g.arcs_.reserve(g.edges_.size() * (flags.directed ? 1 : 2));
    for (const auto& e : g.edges_) {
        g.arcs_.push_back({e.tail, e.head, e.time});
        if (!flags.directed) g.arcs_.push_back({e.head, e.tail, e.time});
    }
    return g;
}

TemporalGraph build_graph(std::size_t n, std::span<const TemporalEdge> edges, GraphFlags flags) {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges.size());
    for (const auto& e : edges) specs.push_back({e.tail, e.head, e.time});
    return build_graph(n, specs, flags);
}

StaticGraph snapshot(const TemporalGraph& g, Time t) {
    StaticGraph s{g.vertex_count(), g.directed(), {}};
    for (const auto& e : g.edges())
        if (e.time == t) s.edges.emplace_back(e.tail, e.head);
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

StaticGraph footprint(const TemporalGraph& g) {
    StaticGraph s{g.vertex_count(), g.directed(), {}};
    for (const auto& e : g.edges()) s.edges.emplace_back(e.tail, e.head);
    std::sort(s.edges.begin(), s.edges.end());
    s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
    return s;
}

GraphStats graph_stats(const TemporalGraph& g) {
    GraphStats st;
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> temporal_degree(n, 0);
    std::set<Time> labels;
    for (const auto& e : g.edges()) {
        ++temporal_degree[e.tail];
        ++temporal_degree[e.head];
        labels.insert(e.time);
    }
    st.labels.assign(labels.begin(), labels.end());
    if (!st.labels.empty()) {
        st.min_label = st.labels.front();
        st.max_label = st.labels.back();
    }

    const StaticGraph fp = footprint(g);
    // Static degree counts distinct neighbours, so u->v and v->u in a directed graph are one.
    std::vector<std::set<Vertex>> neighbours(n);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : fp.edges) {
        neighbours[u].insert(v);
        neighbours[v].insert(u);
        parent[find_root(parent, u)] = find_root(parent, v);
    }
    for (std::size_t v = 0; v < n; ++v) {
        st.max_temporal_degree = std::max(st.max_temporal_degree, temporal_degree[v]);
        st.max_static_degree = std::max(st.max_static_degree, neighbours[v].size());
        if (find_root(parent, v) == v) ++st.footprint_component_count;
    }
    return st;
}

std::pair<TemporalGraph, std::vector<std::int64_t>> induced_subgraph(const TemporalGraph& g,
                                                                     const VertexSet& keep) {
    std::vector<std::int64_t> remap(g.vertex_count(), -1);
    std::int64_t next = 0;
    keep.for_each([&](Vertex v) { remap[v] = next++; });
    std::vector<EdgeSpec> kept;
    for (const auto& e : g.edges())
        if (remap[e.tail] >= 0 && remap[e.head] >= 0) kept.push_back({remap[e.tail], remap[e.head], e.time});
    if (next == 0) throw ValidationError("induced subgraph on an empty vertex set");
    return {build_graph(static_cast<std::size_t>(next), kept, g.flags()), std::move(remap)};
}

// ---- text format -----------------------------------------------------------

std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        pos = end + 1;
    }
    return lines;
}

std::int64_t parse_int(const std::string& token, std::string_view what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ValidationError("expected integer for " + std::string(what) + ", got '" + token + "'");
    return value;
}

TemporalGraph parse_tg(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ValidationError("empty .tg input");
    const auto& h = lines.front();
    if (h.size() != 4 || h[0] != "tg") throw ValidationError("bad .tg header, expected 'tg <directed|undirected> <strict|nonstrict> <n>'");
    GraphFlags flags;
    if (h[1] == "directed") flags.directed = true;
    else if (h[1] == "undirected") flags.directed = false;
    else throw ValidationError("bad directedness '" + h[1] + "'");
    if (h[2] == "strict") flags.strict = true;
    else if (h[2] == "nonstrict") flags.strict = false;
    else throw ValidationError("bad strictness '" + h[2] + "'");
    const auto n = parse_int(h[3], "vertex count");
    if (n < 1) throw ValidationError("vertex count must be positive");
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.size() != 3) throw ValidationError("edge line " + std::to_string(i) + " must have 3 fields");
        edges.push_back({parse_int(l[0], "tail"), parse_int(l[1], "head"), parse_int(l[2], "time")});
    }
    return build_graph(static_cast<std::size_t>(n), edges, flags);
}

std::string serialize_tg(const TemporalGraph& g) {
    std::ostringstream os;
    os << "tg " << (g.directed() ? "directed" : "undirected") << ' ' << (g.strict() ? "strict" : "nonstrict") << ' '
       << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) os << e.tail << ' ' << e.head << ' ' << e.time << '\n';
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << contents;
}

TemporalGraph read_tg_file(const std::string& path) { return parse_tg(read_text_file(path)); }

}  // namespace tcc
