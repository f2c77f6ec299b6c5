#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcc/components.hpp"
#include "tcc/pathgraphs.hpp"

namespace tcc {

/// Sum of C(n,i) for i = 0..min(d,n). Throws CapacityError if it does not fit in 64 bits.
std::uint64_t sauer_shelah_bound(std::uint64_t n, std::uint64_t d);

inline constexpr std::size_t kShatterCap = 20;

/// Every subset of A appears as F & A for some member F. |A| is capped at kShatterCap.
bool is_shattered(const ComponentFamily& family, std::span<const Vertex> A);

struct CensusRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;  // per-trial seed, reproducible with random_kpath
    std::size_t component_count = 0;
    std::uint64_t bound = 0;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    double ms = 0;
};

struct CensusOptions {
    LabelModel labels = LabelModel::proper;
    GraphFlags flags{};
    unsigned threads = 1;  // trials run concurrently; rows stay in trial order
};

/// Per-trial seed derived from the master seed and trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// Throws std::logic_error when a trial breaks the component or node bound.
std::vector<CensusRow> vc_census(std::size_t n, std::size_t k, std::size_t hops, std::size_t trials, std::uint64_t seed,
                                 const CensusOptions& options = {});

/// Header plus one line per row: n,k,seed,components,bound,nodes,ms
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace tcc
