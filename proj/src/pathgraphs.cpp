#include "tcc/pathgraphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "tcc/errors.hpp"
#include "tcc/rng.hpp"

namespace tcc {

std::vector<Vertex> TemporalPath::vertices() const {
    std::vector<Vertex> out{start};
    for (const auto& h : hops) out.push_back(h.to);
    return out;
}

namespace {

std::tuple<Vertex, Vertex, Time> edge_key(Vertex u, Vertex v, Time t, bool directed) {
    if (!directed && v < u) std::swap(u, v);
    return {u, v, t};
}

std::string hop_text(Vertex u, Vertex v, Time t) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(t) + ")";
}

}  // namespace

TemporalGraph validate_cover(const PathCover& cover) {
    if (cover.n == 0) throw ValidationError("cover needs at least one vertex");
    std::map<std::tuple<Vertex, Vertex, Time>, std::size_t> owner;
    std::vector<TemporalEdge> edges;
    for (std::size_t p = 0; p < cover.paths.size(); ++p) {
        const auto& path = cover.paths[p];
        if (path.start >= cover.n) throw ValidationError("path " + std::to_string(p) + " starts outside the vertex range");
        Vertex at = path.start;
        for (std::size_t i = 0; i < path.hops.size(); ++i) {
            const Hop& h = path.hops[i];
            if (h.to >= cover.n) throw ValidationError("path " + std::to_string(p) + " visits out-of-range vertex " + std::to_string(h.to));
            if (h.time < 0) throw ValidationError("negative label on path " + std::to_string(p) + " at " + hop_text(at, h.to, h.time));
            if (h.to == at) throw ValidationError("self-loop on path " + std::to_string(p) + " at " + hop_text(at, h.to, h.time));
            if (i > 0) {
                const Time prev = path.hops[i - 1].time;
                if (cover.flags.strict ? h.time <= prev : h.time < prev)
                    throw ValidationError("labels not " + std::string(cover.flags.strict ? "strictly increasing" : "non-decreasing") +
                                          " on path " + std::to_string(p) + " at " + hop_text(at, h.to, h.time));
            }
            auto [it, fresh] = owner.emplace(edge_key(at, h.to, h.time, cover.flags.directed), p);
            if (!fresh)
                throw ValidationError("temporal edge " + hop_text(at, h.to, h.time) + " lies on paths " +
                                      std::to_string(it->second) + " and " + std::to_string(p));
            edges.push_back({at, h.to, h.time});
            at = h.to;
        }
    }
    return build_graph(cover.n, std::span<const TemporalEdge>(edges), cover.flags);
}

std::vector<Bridge> find_bridges(const PathCover& cover) {
    // occurrences[v] = (number of distinct paths containing v, path of last sighting, total visits)
    std::vector<std::size_t> paths_with(cover.n, 0), visits(cover.n, 0);
    std::vector<std::size_t> last_path(cover.n, SIZE_MAX);
    for (std::size_t p = 0; p < cover.paths.size(); ++p)
        for (Vertex v : cover.paths[p].vertices()) {
            ++visits[v];
            if (last_path[v] != p) {
                last_path[v] = p;
                ++paths_with[v];
            }
        }
    auto exclusive = [&](Vertex v) { return paths_with[v] == 1 && visits[v] == 1; };
    std::vector<Bridge> out;
    for (std::size_t p = 0; p < cover.paths.size(); ++p) {
        const auto vs = cover.paths[p].vertices();
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (exclusive(vs[i]) && exclusive(vs[i + 1])) out.push_back({p, i, vs[i], vs[i + 1]});
    }
    return out;
}

StrippedGraph remove_bridges(const PathCover& cover) {
    const TemporalGraph g = validate_cover(cover);
    VertexSet keep = VertexSet::full(cover.n);
    for (const auto& b : find_bridges(cover)) {
        keep.reset(b.first);
        keep.reset(b.second);
    }
    if (keep.none()) throw ValidationError("every vertex is a bridge vertex; nothing would remain");
    auto [h, map] = induced_subgraph(g, keep);
    return {std::move(h), std::move(map)};
}

bool verify_monotone(const PathCover& cover, std::span<const Vertex> order) {
    if (order.size() != cover.n) throw ValidationError("order must list all " + std::to_string(cover.n) + " vertices");
    std::vector<std::size_t> rank(cover.n, SIZE_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= cover.n || rank[order[i]] != SIZE_MAX) throw ValidationError("order is not a permutation");
        rank[order[i]] = i;
    }
    for (const auto& path : cover.paths) {
        const auto vs = path.vertices();
        bool up = true, down = true;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            up = up && rank[vs[i]] < rank[vs[i + 1]];
            down = down && rank[vs[i]] > rank[vs[i + 1]];
        }
        if (!up && !down) return false;
    }
    return true;
}

PathCover random_kpath(std::size_t n, std::size_t k, std::size_t hops, std::uint64_t seed, LabelModel model,
                       GraphFlags flags) {
    if (n < 2) throw ValidationError("random_kpath needs n >= 2");
    if (k < 1) throw ValidationError("random_kpath needs k >= 1");
    constexpr int kRetries = 1000;
    Rng rng(seed);
    PathCover cover{n, flags, {}};

    std::vector<Time> label_pool;
    if (model == LabelModel::proper) {
        label_pool.resize(k * hops);
        std::iota(label_pool.begin(), label_pool.end(), Time{1});
        for (std::size_t i = label_pool.size(); i > 1; --i) std::swap(label_pool[i - 1], label_pool[rng.below(i)]);
    }

    std::set<std::tuple<Vertex, Vertex, Time>> used;
    for (std::size_t p = 0; p < k; ++p) {
        std::vector<Time> labels;
        if (model == LabelModel::proper) {
            labels.assign(label_pool.begin() + static_cast<std::ptrdiff_t>(p * hops),
                          label_pool.begin() + static_cast<std::ptrdiff_t>((p + 1) * hops));
            std::sort(labels.begin(), labels.end());
        }
        bool placed = false;
        for (int attempt = 0; attempt < kRetries && !placed; ++attempt) {
            if (model == LabelModel::uniform) {
                // Partial Fisher-Yates over 1..2*hops.
                std::vector<Time> range(2 * hops);
                std::iota(range.begin(), range.end(), Time{1});
                for (std::size_t i = 0; i < hops; ++i) std::swap(range[i], range[i + rng.below(range.size() - i)]);
                labels.assign(range.begin(), range.begin() + static_cast<std::ptrdiff_t>(hops));
                std::sort(labels.begin(), labels.end());
            }
            TemporalPath path{static_cast<Vertex>(rng.below(n)), {}};
            Vertex at = path.start;
            Vertex prev = static_cast<Vertex>(n);  // none yet
            std::set<std::tuple<Vertex, Vertex, Time>> mine;
            bool clash = false;
            for (std::size_t i = 0; i < hops && !clash; ++i) {
                Vertex next;
                if (n == 2 || prev == n) {
                    next = static_cast<Vertex>(rng.below(n - 1));
                    if (next >= at) ++next;
                } else {
                    // Uniform over vertices other than `at` and `prev`.
                    next = static_cast<Vertex>(rng.below(n - 2));
                    const Vertex lo = std::min(at, prev), hi = std::max(at, prev);
                    if (next >= lo) ++next;
                    if (next >= hi) ++next;
                }
                const auto key = edge_key(at, next, labels[i], flags.directed);
                if (used.count(key) || !mine.insert(key).second) clash = true;
                path.hops.push_back({labels[i], next});
                prev = at;
                at = next;
            }
            if (clash) continue;
            used.insert(mine.begin(), mine.end());
            cover.paths.push_back(std::move(path));
            placed = true;
        }
        if (!placed) throw ValidationError("random_kpath: could not place path " + std::to_string(p) + " without duplicate edges");
    }
    return cover;
}

PathCover parse_tpc(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ValidationError("empty .tpc input");
    const auto& h = lines.front();
    if (h.size() != 5 || h[0] != "tpc")
        throw ValidationError("bad .tpc header, expected 'tpc <directed|undirected> <strict|nonstrict> <n> <k>'");
    PathCover cover;
    if (h[1] == "directed") cover.flags.directed = true;
    else if (h[1] == "undirected") cover.flags.directed = false;
    else throw ValidationError("bad directedness '" + h[1] + "'");
    if (h[2] == "strict") cover.flags.strict = true;
    else if (h[2] == "nonstrict") cover.flags.strict = false;
    else throw ValidationError("bad strictness '" + h[2] + "'");
    const auto n = parse_int(h[3], "vertex count");
    const auto k = parse_int(h[4], "path count");
    if (n < 1) throw ValidationError("vertex count must be positive");
    if (k < 0) throw ValidationError("path count must be non-negative");
    cover.n = static_cast<std::size_t>(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0] != "path" || l.size() < 2 || l.size() % 2 != 0)
            throw ValidationError("path line " + std::to_string(i) + " must read 'path v0 t1 v1 ...'");
        auto vertex = [&](const std::string& tok) {
            const auto v = parse_int(tok, "vertex");
            if (v < 0 || v >= n) throw ValidationError("vertex " + tok + " out of range on path line " + std::to_string(i));
            return static_cast<Vertex>(v);
        };
        TemporalPath path{vertex(l[1]), {}};
        for (std::size_t j = 2; j + 1 < l.size(); j += 2) path.hops.push_back({parse_int(l[j], "time"), vertex(l[j + 1])});
        cover.paths.push_back(std::move(path));
    }
    if (cover.paths.size() != static_cast<std::size_t>(k))
        throw ValidationError("header announces " + std::to_string(k) + " paths, found " + std::to_string(cover.paths.size()));
    return cover;
}

std::string serialize_tpc(const PathCover& cover) {
    std::ostringstream os;
    os << "tpc " << (cover.flags.directed ? "directed" : "undirected") << ' '
       << (cover.flags.strict ? "strict" : "nonstrict") << ' ' << cover.n << ' ' << cover.paths.size() << '\n';
    for (const auto& p : cover.paths) {
        os << "path " << p.start;
        for (const auto& h : p.hops) os << ' ' << h.time << ' ' << h.to;
        os << '\n';
    }
    return os.str();
}

PathCover read_tpc_file(const std::string& path) { return parse_tpc(read_text_file(path)); }

}  // namespace tcc
