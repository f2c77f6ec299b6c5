#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcc/vertex_set.hpp"

namespace tcc {

using Time = std::int64_t;

/// A single (tail, head, time) triple. For undirected graphs tail < head after normalization.
struct TemporalEdge {
    Vertex tail = 0;
    Vertex head = 0;
    Time time = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// Chronological order used by the serializer: (time, tail, head).
inline bool chronological_less(const TemporalEdge& a, const TemporalEdge& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.tail != b.tail) return a.tail < b.tail;
    return a.head < b.head;
}

/// Unvalidated input triple; signed so that negative values can be reported rather than wrapped.
struct EdgeSpec {
    std::int64_t tail = 0;
    std::int64_t head = 0;
    std::int64_t time = 0;
};

struct GraphFlags {
    bool directed = true;
    bool strict = true;

    friend bool operator==(const GraphFlags&, const GraphFlags&) = default;
};

/// Directed traversal arc. Undirected edges contribute one arc per direction.
struct Arc {
    Vertex from;
    Vertex to;
    Time time;
};

/// Immutable temporal graph on vertices 0..n-1.
class TemporalGraph {
public:
    TemporalGraph() = default;

    std::size_t vertex_count() const { return n_; }
    bool directed() const { return flags_.directed; }
    bool strict() const { return flags_.strict; }
    GraphFlags flags() const { return flags_; }

    /// Edges sorted chronologically, duplicate-free.
    const std::vector<TemporalEdge>& edges() const { return edges_; }
    /// Traversal arcs sorted by time.
    const std::vector<Arc>& arcs() const { return arcs_; }

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
        return a.n_ == b.n_ && a.flags_ == b.flags_ && a.edges_ == b.edges_;
    }

private:
    friend TemporalGraph build_graph(std::size_t, std::span<const EdgeSpec>, GraphFlags);

    std::size_t n_ = 0;
    GraphFlags flags_;
    std::vector<TemporalEdge> edges_;
    std::vector<Arc> arcs_;
};

/// Validates and normalizes. Throws ValidationError naming the offending triple.
TemporalGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges, GraphFlags flags);
TemporalGraph build_graph(std::size_t n, std::span<const TemporalEdge> edges, GraphFlags flags);

struct StaticGraph {
    std::size_t n = 0;
    bool directed = true;
    /// Sorted, duplicate-free; (u, v) with u < v when undirected.
    std::vector<std::pair<Vertex, Vertex>> edges;

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;
};

StaticGraph snapshot(const TemporalGraph& g, Time t);
StaticGraph footprint(const TemporalGraph& g);

struct GraphStats {
    std::vector<Time> labels;  // distinct labels, ascending
    Time min_label = 0;
    Time max_label = 0;
    std::size_t max_temporal_degree = 0;
    std::size_t max_static_degree = 0;
    std::size_t footprint_component_count = 0;

    std::size_t lifetime() const { return labels.size(); }
};

GraphStats graph_stats(const TemporalGraph& g);

/// Subgraph on the members of keep (ids re-indexed ascending); returns the graph and old->new map
/// with -1 for dropped vertices.
std::pair<TemporalGraph, std::vector<std::int64_t>> induced_subgraph(const TemporalGraph& g,
                                                                     const VertexSet& keep);

// ---- .tg text format -------------------------------------------------------

TemporalGraph parse_tg(std::string_view text);
std::string serialize_tg(const TemporalGraph& g);
TemporalGraph read_tg_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

/// Splits into whitespace tokens per line, dropping `#` comments and blank lines.
std::vector<std::vector<std::string>> tokenize_lines(std::string_view text);
std::int64_t parse_int(const std::string& token, std::string_view what);

}  // namespace tcc
