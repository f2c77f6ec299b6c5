#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "tcc/errors.hpp"
#include "tcc/reachability.hpp"
#include "tcc/temporal_graph.hpp"
#include "tcc/vertex_set.hpp"

namespace tcc {

using Component = std::vector<Vertex>;

/// Antichain of vertex sets. Canonical form: each set ascending, sets in lexicographic order.
struct ComponentFamily {
    std::vector<Component> sets;

    std::size_t size() const { return sets.size(); }
    friend bool operator==(const ComponentFamily&, const ComponentFamily&) = default;
};

/// Sorts members and sets, removes duplicates and every set contained in another.
ComponentFamily canonical_antichain(std::vector<Component> sets);

struct SolveReport {
    Component best_set;
    std::size_t size = 0;
    std::uint64_t search_nodes = 0;
    std::chrono::duration<double> wall_time{};
};

/// Thrown when a search node budget runs out; carries the incumbent as a lower bound.
class BudgetExceeded : public CapacityError {
public:
    BudgetExceeded(const std::string& what, SolveReport lower_bound)
        : CapacityError(what), lower_bound_(std::move(lower_bound)) {}
    const SolveReport& lower_bound() const { return lower_bound_; }

private:
    SolveReport lower_bound_;
};

/// Checks ids and builds the bitset; throws ValidationError on out-of-range ids.
VertexSet make_vertex_set(const TemporalGraph& g, std::span<const Vertex> X);

bool is_open_connected(const TemporalGraph& g, std::span<const Vertex> X);
bool is_open_connected(const ReachMatrix& reach, const VertexSet& X);
bool is_closed_connected(const TemporalGraph& g, std::span<const Vertex> X);
bool is_closed_connected(const TemporalGraph& g, const VertexSet& X);

bool is_maximal_open(const TemporalGraph& g, std::span<const Vertex> X);
bool is_maximal_open(const CompatibilityGraph& compat, const VertexSet& X);

enum class ClosedMaximality { weak, strong };

inline constexpr std::size_t kDefaultStrongBudget = 24;

/// weak: no single-vertex closed extension. strong: no closed proper superset; the candidate
/// vertices (compatible with all of X) must not exceed `candidate_budget`.
bool is_maximal_closed(const TemporalGraph& g, std::span<const Vertex> X, ClosedMaximality mode,
                       std::size_t candidate_budget = kDefaultStrongBudget);

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t maximal_leaves = 0;
};

/// Include/exclude branching on the lowest surviving vertex (include first). Including v keeps
/// only vertices compatible with v; a branch is closed as soon as an excluded vertex is
/// compatible with the current set and all remaining candidates.
ComponentFamily enumerate_maximal_open(const CompatibilityGraph& compat, EnumerationStats* stats = nullptr,
                                       unsigned threads = 1);
ComponentFamily enumerate_maximal_open(const TemporalGraph& g, EnumerationStats* stats = nullptr,
                                       unsigned threads = 1);

/// Maximum open tcc; ties resolved to the lexicographically smallest set.
SolveReport max_open_tcc(const TemporalGraph& g, unsigned threads = 1);

struct ClosedSearchOptions {
    std::uint64_t node_budget = 500'000'000;
    unsigned threads = 1;
};

/// Branch and bound over cliques of the compatibility graph, bounded by greedy colouring.
SolveReport max_closed_tcc(const TemporalGraph& g, const ClosedSearchOptions& options = {});

/// Pivoting Bron-Kerbosch over the compatibility graph.
ComponentFamily maximal_cliques_pivot(const CompatibilityGraph& compat);
SolveReport oracle_max_open(const TemporalGraph& g);

inline constexpr std::size_t kOracleClosedCap = 24;

/// Exhaustive subset scan, largest subsets first.
SolveReport oracle_max_closed(const TemporalGraph& g, std::size_t cap = kOracleClosedCap);

}  // namespace tcc
