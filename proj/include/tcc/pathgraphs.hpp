#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/temporal_graph.hpp"

namespace tcc {

struct Hop {
    Time time = 0;
    Vertex to = 0;

    friend bool operator==(const Hop&, const Hop&) = default;
};

/// A walk given as its start vertex followed by timed hops.
struct TemporalPath {
    Vertex start = 0;
    std::vector<Hop> hops;

    std::vector<Vertex> vertices() const;
    friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
};

struct PathCover {
    std::size_t n = 0;
    GraphFlags flags;
    std::vector<TemporalPath> paths;

    std::size_t size() const { return paths.size(); }
    friend bool operator==(const PathCover&, const PathCover&) = default;
};

/// Builds the union graph; throws ValidationError on label order, range or exact-cover violations.
TemporalGraph validate_cover(const PathCover& cover);

struct Bridge {
    std::size_t path_index = 0;
    std::size_t position = 0;  // index of `first` in the path's vertex sequence
    Vertex first = 0;
    Vertex second = 0;

    friend bool operator==(const Bridge&, const Bridge&) = default;
};

/// Consecutive pairs whose vertices occur on no other path and only once on their own path.
std::vector<Bridge> find_bridges(const PathCover& cover);

struct StrippedGraph {
    TemporalGraph graph;
    std::vector<std::int64_t> old_to_new;  // -1 for deleted vertices
};

StrippedGraph remove_bridges(const PathCover& cover);

/// Every path ascends or descends strictly under `order` (a permutation listing vertices by rank).
bool verify_monotone(const PathCover& cover, std::span<const Vertex> order);

enum class LabelModel { proper, uniform };

/// Random walks without immediate backtracking (except on two vertices). uniform: each path draws
/// `hops` distinct labels from 1..2*hops. proper: a random permutation of 1..k*hops cut into one
/// block per path, so every label is used once.
PathCover random_kpath(std::size_t n, std::size_t k, std::size_t hops, std::uint64_t seed, LabelModel model,
                       GraphFlags flags = {});

// ---- .tpc text format ------------------------------------------------------

PathCover parse_tpc(std::string_view text);
std::string serialize_tpc(const PathCover& cover);
PathCover read_tpc_file(const std::string& path);

}  // namespace tcc
