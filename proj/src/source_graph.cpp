#include <algorithm>
#include <sstream>

#include "tcc/errors.hpp"
#include "tcc/reductions.hpp"

namespace tcc {

bool SourceGraph::adjacent(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

SourceGraph make_source_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                              std::vector<std::vector<Vertex>> classes) {
    if (n < 1) throw ValidationError("source graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw ValidationError("source edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw ValidationError("source edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto d = std::adjacent_find(edges.begin(), edges.end()); d != edges.end())
        throw ValidationError("duplicate source edge (" + std::to_string(d->first) + "," + std::to_string(d->second) + ")");
    if (!classes.empty()) {
        std::vector<int> seen(n, 0);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto& c = classes[i];
            if (c.empty()) throw ValidationError("colour class " + std::to_string(i + 1) + " is empty");
            std::sort(c.begin(), c.end());
            for (Vertex v : c) {
                if (v >= n) throw ValidationError("class vertex " + std::to_string(v) + " out of range");
                if (seen[v]++) throw ValidationError("vertex " + std::to_string(v) + " lies in two colour classes");
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v]) throw ValidationError("vertex " + std::to_string(v) + " has no colour class");
    }
    return {n, std::move(edges), std::move(classes)};
}

SourceGraph parse_edg(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "graph")
        throw ValidationError("bad .edg header, expected 'graph <n>'");
    const auto n = parse_int(lines[0][1], "vertex count");
    if (n < 1) throw ValidationError("vertex count must be positive");
    auto vertex = [&](const std::string& tok) {
        const auto v = parse_int(tok, "vertex");
        if (v < 0 || v >= n) throw ValidationError("vertex " + tok + " out of range");
        return static_cast<Vertex>(v);
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<std::int64_t, std::vector<Vertex>> classes;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0] == "class") {
            if (l.size() < 3) throw ValidationError("class line needs an index and at least one vertex");
            const auto idx = parse_int(l[1], "class index");
            if (classes.count(idx)) throw ValidationError("class " + l[1] + " listed twice");
            auto& c = classes[idx];
            for (std::size_t j = 2; j < l.size(); ++j) c.push_back(vertex(l[j]));
        } else {
            if (l.size() != 2) throw ValidationError("edge line " + std::to_string(i) + " must have 2 fields");
            edges.emplace_back(vertex(l[0]), vertex(l[1]));
        }
    }
    std::vector<std::vector<Vertex>> ordered;
    for (auto& [idx, c] : classes) ordered.push_back(std::move(c));
    return make_source_graph(static_cast<std::size_t>(n), std::move(edges), std::move(ordered));
}

std::string serialize_edg(const SourceGraph& h) {
    std::ostringstream os;
    os << "graph " << h.n << '\n';
    for (auto [u, v] : h.edges) os << u << ' ' << v << '\n';
    for (std::size_t i = 0; i < h.classes.size(); ++i) {
        os << "class " << (i + 1);
        for (Vertex v : h.classes[i]) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

SourceGraph read_edg_file(const std::string& path) { return parse_edg(read_text_file(path)); }

std::vector<Vertex> max_clique(const SourceGraph& h) {
    CompatibilityGraph adj(h.n);
    for (auto [u, v] : h.edges) {
        adj.neighbours(u).set(v);
        adj.neighbours(v).set(u);
    }
    const ComponentFamily cliques = maximal_cliques_pivot(adj);
    std::vector<Vertex> best;
    for (const auto& c : cliques.sets)
        if (c.size() > best.size()) best = c;
    return best;
}

namespace {

bool pick_colourful(const SourceGraph& h, std::size_t cls, std::vector<Vertex>& chosen) {
    if (cls == h.classes.size()) return true;
    for (Vertex v : h.classes[cls]) {
        bool ok = true;
        for (Vertex u : chosen) ok = ok && h.adjacent(u, v);
        if (!ok) continue;
        chosen.push_back(v);
        if (pick_colourful(h, cls + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> multicolored_clique(const SourceGraph& h) {
    if (h.classes.empty()) throw ValidationError("multicoloured clique needs colour classes");
    std::vector<Vertex> chosen;
    if (pick_colourful(h, 0, chosen)) return chosen;
    return std::nullopt;
}

}  // namespace tcc
