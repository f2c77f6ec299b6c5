#include <algorithm>

#include "tcc/errors.hpp"
#include "tcc/reductions.hpp"

namespace tcc {

GeneratedGraph compose_disjoint(std::span<const TemporalGraph> parts, std::size_t s) {
    if (parts.empty()) throw ValidationError("composition needs at least one part");
    const GraphFlags flags = parts.front().flags();
    ReductionCertificate cert;
    cert.construction = "disjoint";
    std::vector<TemporalEdge> edges;
    Vertex offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& g = parts[i];
        if (g.flags() != flags) throw ValidationError("part " + std::to_string(i + 1) + " has different flags");
        for (const auto& e : g.edges()) edges.push_back({e.tail + offset, e.head + offset, e.time});
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            cert.role_map.push_back("part." + std::to_string(i + 1) + "." + std::to_string(v));
        offset += static_cast<Vertex>(g.vertex_count());
    }
    GeneratedGraph out;
    out.graph = build_graph(offset, std::span<const TemporalEdge>(edges), flags);
    cert.structural_claims = {"part-confinement"};
    cert.params = {{"parts", static_cast<std::int64_t>(parts.size())}, {"s", static_cast<std::int64_t>(s)}};
    out.cert = std::move(cert);
    return out;
}

GeneratedCover compose_chained(std::span<const TemporalGraph> parts, std::size_t s) {
    if (parts.empty()) throw ValidationError("composition needs at least one part");
    if (s < 3) throw ValidationError("chained composition needs s >= 3");
    const auto& first = parts.front();
    const std::size_t n = first.vertex_count(), m = first.edges().size();
    if (m == 0) throw ValidationError("chained composition needs parts with at least one edge");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& g = parts[i];
        const std::string which = "part " + std::to_string(i + 1);
        if (g.flags() != first.flags()) throw ValidationError(which + " has different flags");
        if (g.vertex_count() != n) throw ValidationError(which + " has a different vertex count");
        if (g.edges().size() != m) throw ValidationError(which + " has a different temporal-edge count");
        for (const auto& e : g.edges())
            if (e.time != 1 && e.time != 2)
                throw ValidationError(which + " uses label " + std::to_string(e.time) + "; only 1 and 2 are allowed");
    }

    const std::size_t t = parts.size();
    const Time period = 2 * static_cast<Time>(m) + 2;
    ReductionCertificate cert;
    cert.construction = "chain";
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t v = 0; v < n; ++v) cert.role_map.push_back("part." + std::to_string(i + 1) + "." + std::to_string(v));
    auto part_vertex = [&](std::size_t i, Vertex v) { return static_cast<Vertex>(i * n + v); };
    auto connector = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(t * n + i * m + j); };
    for (std::size_t i = 0; i + 1 < t; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cert.role_map.push_back("conn." + std::to_string(i + 1) + "." + std::to_string(j + 1));

    // Edge j of every part, ordered by (tail, head, time); path j runs through all parts' edge j.
    std::vector<std::vector<TemporalEdge>> ordered;
    for (const auto& g : parts) {
        auto es = g.edges();
        std::sort(es.begin(), es.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
            return std::tie(a.tail, a.head, a.time) < std::tie(b.tail, b.head, b.time);
        });
        ordered.push_back(std::move(es));
    }
    GeneratedCover out;
    out.cover.n = cert.role_map.size();
    out.cover.flags = first.flags();
    for (std::size_t j = 0; j < m; ++j) {
        TemporalPath path{part_vertex(0, ordered[0][j].tail), {}};
        for (std::size_t i = 0; i < t; ++i) {
            const auto& e = ordered[i][j];
            const Time shift = period * static_cast<Time>(i);
            if (i > 0) {
                const Vertex w = connector(i - 1, j);
                const Time base = period * static_cast<Time>(i - 1) + 2;
                path.hops.push_back({base + static_cast<Time>(j + 1), w});
                path.hops.push_back({base + static_cast<Time>(m + j + 1), part_vertex(i, e.tail)});
            }
            path.hops.push_back({e.time + shift, part_vertex(i, e.head)});
        }
        out.cover.paths.push_back(std::move(path));
    }
    out.graph = validate_cover(out.cover);
    cert.structural_claims = {"part-confinement", "triangle-confinement", "connector-labels", "part-label-windows",
                              "path-count"};
    cert.params = {{"parts", static_cast<std::int64_t>(t)},
                   {"n", static_cast<std::int64_t>(n)},
                   {"m", static_cast<std::int64_t>(m)},
                   {"s", static_cast<std::int64_t>(s)}};
    out.cert = std::move(cert);
    return out;
}

}  // namespace tcc
