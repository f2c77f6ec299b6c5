#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcc/components.hpp"
#include "tcc/pathgraphs.hpp"
#include "tcc/temporal_graph.hpp"

namespace tcc {

/// Simple undirected graph, optionally partitioned into colour classes.
struct SourceGraph {
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted, unique
    std::vector<std::vector<Vertex>> classes;      // each ascending; empty when uncoloured

    bool adjacent(Vertex u, Vertex v) const;
    friend bool operator==(const SourceGraph&, const SourceGraph&) = default;
};

/// Normalizes and validates (range, loops, duplicates, classes partition 0..n-1).
SourceGraph make_source_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                              std::vector<std::vector<Vertex>> classes = {});

SourceGraph parse_edg(std::string_view text);
std::string serialize_edg(const SourceGraph& h);
SourceGraph read_edg_file(const std::string& path);

/// A maximum clique of h, lexicographically smallest among maximum ones.
std::vector<Vertex> max_clique(const SourceGraph& h);
/// One vertex per class forming a clique, if any (classes required).
std::optional<std::vector<Vertex>> multicolored_clique(const SourceGraph& h);

struct ReductionCertificate {
    std::string construction;
    std::vector<std::string> role_map;  // indexed by generated vertex id
    Component expected_component;
    std::size_t expected_size = 0;
    std::vector<std::string> structural_claims;
    std::map<std::string, std::int64_t> params;

    friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

std::string certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(std::string_view text);

struct GeneratedGraph {
    TemporalGraph graph;
    ReductionCertificate cert;
};

struct GeneratedCover {
    PathCover cover;
    TemporalGraph graph;
    ReductionCertificate cert;
};

/// Subdivided edge pairs on originals 0..n-1: rank-i edge uv yields (u,x_uv,i), (x_uv,v,m+i),
/// (v,x_vu,i), (x_vu,u,m+i). Directed by default; see README for why.
GeneratedGraph gen_semaphore(const SourceGraph& h, bool undirected = false);

/// Six-path instance; `witness` is a clique of size >= s whose first s members seed the expected
/// component (one is searched for when omitted).
GeneratedCover gen_ctcc_6path(const SourceGraph& h, std::size_t s,
                              const std::optional<std::vector<Vertex>>& witness = std::nullopt,
                              bool undirected = false);

/// Separator construction from a coloured graph. `witness` lists one vertex per class.
GeneratedGraph gen_mcc_tw9(const SourceGraph& h, bool undirected = false,
                           const std::optional<std::vector<Vertex>>& witness = std::nullopt);

GeneratedGraph compose_disjoint(std::span<const TemporalGraph> parts, std::size_t s);

/// Parts must share n, m and flags, and use only labels 1 and 2.
GeneratedCover compose_chained(std::span<const TemporalGraph> parts, std::size_t s);

struct ClaimResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample on failure
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool all_passed() const;
    const ClaimResult* find(std::string_view name) const;
};

/// Evaluates every structural claim of `cert` against g. `cover` enables the path-count claims.
VerificationReport verify_certificate(const TemporalGraph& g, const ReductionCertificate& cert,
                                      const PathCover* cover = nullptr, unsigned threads = 1);

}  // namespace tcc
