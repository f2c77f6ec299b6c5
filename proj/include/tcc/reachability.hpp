#pragma once

#include <limits>
#include <vector>

#include "tcc/temporal_graph.hpp"
#include "tcc/vertex_set.hpp"

namespace tcc {

/// Arrival marker for a path's starting vertex (the empty path); precedes every label.
inline constexpr Time kStart = std::numeric_limits<Time>::min();
inline constexpr Time kUnreached = std::numeric_limits<Time>::max();

/// Earliest arrival per vertex: kStart for the source, kUnreached when not reachable.
std::vector<Time> earliest_arrival(const TemporalGraph& g, Vertex source);

/// Streams arcs chronologically from arbitrary initial arrivals. Arcs touching a vertex outside
/// `within` are ignored when `within` is given.
std::vector<Time> propagate_arrivals(const TemporalGraph& g, std::vector<Time> arrival,
                                     const VertexSet* within = nullptr);

/// Reflexive one-way reachability, one packed row per vertex.
class ReachMatrix {
public:
    ReachMatrix() = default;
    explicit ReachMatrix(std::size_t n) : rows_(n, VertexSet(n)) {}

    std::size_t size() const { return rows_.size(); }
    bool reaches(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const VertexSet& row(Vertex u) const { return rows_[u]; }
    VertexSet& row(Vertex u) { return rows_[u]; }
    bool all_true() const;

    friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

private:
    std::vector<VertexSet> rows_;
};

ReachMatrix reach_matrix(const TemporalGraph& g, unsigned threads = 1);

/// Reachability using only vertices of X. Row/column i refers to the i-th smallest member of X.
ReachMatrix reach_matrix_within(const TemporalGraph& g, const VertexSet& X);

/// Symmetric irreflexive relation: adj(u,v) iff u and v reach each other.
class CompatibilityGraph {
public:
    CompatibilityGraph() = default;
    explicit CompatibilityGraph(std::size_t n) : adj_(n, VertexSet(n)) {}

    std::size_t size() const { return adj_.size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const VertexSet& neighbours(Vertex u) const { return adj_[u]; }
    VertexSet& neighbours(Vertex u) { return adj_[u]; }
    std::size_t edge_count() const;

private:
    std::vector<VertexSet> adj_;
};

CompatibilityGraph compatibility_graph(const ReachMatrix& reach);
CompatibilityGraph compatibility_graph(const TemporalGraph& g, unsigned threads = 1);

}  // namespace tcc
