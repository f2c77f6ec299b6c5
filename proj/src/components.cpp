#include "tcc/components.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace tcc {

namespace {

using Clock = std::chrono::steady_clock;

bool lex_less(const Component& a, const Component& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t colour_bound(const CompatibilityGraph& compat, VertexSet uncoloured) {
    std::size_t colours = 0;
    while (uncoloured.any()) {
        ++colours;
        VertexSet available = uncoloured;
        while (available.any()) {
            const Vertex v = available.first();
            uncoloured.reset(v);
            available.reset(v);
            available -= compat.neighbours(v);
        }
    }
    return colours;
}

struct Frame {
    VertexSet chosen;
    VertexSet candidates;
    VertexSet excluded;
};

struct BranchResult {
    EnumerationStats stats;
    std::vector<Component> leaves;
};

class MaximalOpenBrancher {
public:
    explicit MaximalOpenBrancher(const CompatibilityGraph& compat) : compat_(compat) {}

    /// Full subtree below `f`.
    void run(const Frame& f, BranchResult& out) const { visit(f.chosen, f.candidates, f.excluded, out, nullptr, 0); }

    /// Expands the tree down to `depth`, counting interior nodes and collecting deeper frames in DFS order.
    void split(const Frame& f, std::size_t depth, BranchResult& out, std::vector<Frame>& frontier) const {
        visit(f.chosen, f.candidates, f.excluded, out, &frontier, depth);
    }

private:
    void visit(const VertexSet& chosen, const VertexSet& candidates, const VertexSet& excluded, BranchResult& out,
               std::vector<Frame>* frontier, std::size_t depth) const {
        if (frontier && depth == 0) {
            frontier->push_back({chosen, candidates, excluded});
            return;
        }
        ++out.stats.nodes;
        if (candidates.none()) {
            ++out.stats.leaves;
            if (excluded.none()) {
                ++out.stats.maximal_leaves;
                out.leaves.push_back(chosen.members());
            }
            return;
        }
        bool dominated = false;
        excluded.for_each([&](Vertex x) {
            if (!dominated && candidates.is_subset_of(compat_.neighbours(x))) dominated = true;
        });
        if (dominated) {
            ++out.stats.leaves;
            return;
        }
        const Vertex v = candidates.first();
        const VertexSet& nv = compat_.neighbours(v);
        VertexSet with = chosen;
        with.set(v);
        visit(with, candidates & nv, excluded & nv, out, frontier, depth ? depth - 1 : 0);
        VertexSet rest = candidates;
        rest.reset(v);
        VertexSet ex = excluded;
        ex.set(v);
        visit(chosen, rest, ex, out, frontier, depth ? depth - 1 : 0);
    }

    const CompatibilityGraph& compat_;
};

}  // namespace

ComponentFamily canonical_antichain(std::vector<Component> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(sets.begin(), sets.end(), lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<bool> dominated(sets.size(), false);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size() && !dominated[i]; ++j)
            if (i != j && sets[i].size() < sets[j].size() &&
                std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                dominated[i] = true;
    ComponentFamily family;
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!dominated[i]) family.sets.push_back(std::move(sets[i]));
    return family;
}

VertexSet make_vertex_set(const TemporalGraph& g, std::span<const Vertex> X) {
    VertexSet s(g.vertex_count());
    for (Vertex v : X) {
        if (v >= g.vertex_count()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

bool is_open_connected(const ReachMatrix& reach, const VertexSet& X) {
    bool ok = true;
    X.for_each([&](Vertex u) {
        if (ok && !X.is_subset_of(reach.row(u))) ok = false;
    });
    return ok;
}

bool is_open_connected(const TemporalGraph& g, std::span<const Vertex> X) {
    const VertexSet set = make_vertex_set(g, X);
    return is_open_connected(reach_matrix(g), set);
}

bool is_closed_connected(const TemporalGraph& g, const VertexSet& X) {
    if (X.count() <= 1) return true;
    return reach_matrix_within(g, X).all_true();
}

bool is_closed_connected(const TemporalGraph& g, std::span<const Vertex> X) {
    return is_closed_connected(g, make_vertex_set(g, X));
}

bool is_maximal_open(const CompatibilityGraph& compat, const VertexSet& X) {
    bool clique = true;
    X.for_each([&](Vertex u) {
        VertexSet others = X;
        others.reset(u);
        if (clique && !others.is_subset_of(compat.neighbours(u))) clique = false;
    });
    if (!clique) return false;
    for (Vertex v = 0; v < compat.size(); ++v)
        if (!X.test(v) && X.is_subset_of(compat.neighbours(v))) return false;
    return true;
}

bool is_maximal_open(const TemporalGraph& g, std::span<const Vertex> X) {
    const VertexSet set = make_vertex_set(g, X);
    return is_maximal_open(compatibility_graph(g), set);
}

namespace {

bool has_closed_clique_extension(const TemporalGraph& g, const CompatibilityGraph& compat, VertexSet& current,
                                 const std::vector<Vertex>& candidates, std::size_t from, bool grown) {
    if (grown && is_closed_connected(g, current)) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
        const Vertex v = candidates[i];
        if (!current.is_subset_of(compat.neighbours(v))) continue;
        current.set(v);
        const bool found = has_closed_clique_extension(g, compat, current, candidates, i + 1, true);
        current.reset(v);
        if (found) return true;
    }
    return false;
}

}  // namespace

bool is_maximal_closed(const TemporalGraph& g, std::span<const Vertex> X, ClosedMaximality mode,
                       std::size_t candidate_budget) {
    VertexSet set = make_vertex_set(g, X);
    if (!is_closed_connected(g, set)) return false;
    const CompatibilityGraph compat = compatibility_graph(g);
    // A closed-connected superset is pairwise compatible, so only common neighbours can extend X.
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!set.test(v) && set.is_subset_of(compat.neighbours(v))) candidates.push_back(v);
    if (mode == ClosedMaximality::weak) {
        for (Vertex v : candidates) {
            set.set(v);
            const bool closed = is_closed_connected(g, set);
            set.reset(v);
            if (closed) return false;
        }
        return true;
    }
    if (candidates.size() > candidate_budget)
        throw CapacityError("strong maximality check needs " + std::to_string(candidates.size()) +
                            " candidate vertices, budget is " + std::to_string(candidate_budget));
    return !has_closed_clique_extension(g, compat, set, candidates, 0, false);
}

ComponentFamily enumerate_maximal_open(const CompatibilityGraph& compat, EnumerationStats* stats, unsigned threads) {
    const std::size_t n = compat.size();
    MaximalOpenBrancher brancher(compat);
    Frame root{VertexSet(n), VertexSet::full(n), VertexSet(n)};
    BranchResult total;
    if (threads <= 1) {
        brancher.run(root, total);
    } else {
        std::vector<Frame> frontier;
        brancher.split(root, 10, total, frontier);
        std::vector<BranchResult> parts(frontier.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < frontier.size(); i += threads) brancher.run(frontier[i], parts[i]);
            });
        for (auto& t : pool) t.join();
        for (auto& p : parts) {
            total.stats.nodes += p.stats.nodes;
            total.stats.leaves += p.stats.leaves;
            total.stats.maximal_leaves += p.stats.maximal_leaves;
            for (auto& l : p.leaves) total.leaves.push_back(std::move(l));
        }
    }
    if (stats) *stats = total.stats;
    return canonical_antichain(std::move(total.leaves));
}

ComponentFamily enumerate_maximal_open(const TemporalGraph& g, EnumerationStats* stats, unsigned threads) {
    return enumerate_maximal_open(compatibility_graph(g, threads), stats, threads);
}

SolveReport max_open_tcc(const TemporalGraph& g, unsigned threads) {
    const auto start = Clock::now();
    EnumerationStats stats;
    const ComponentFamily family = enumerate_maximal_open(g, &stats, threads);
    SolveReport report;
    for (const auto& s : family.sets)
        if (s.size() > report.size) {
            report.size = s.size();
            report.best_set = s;
        }
    report.search_nodes = stats.nodes;
    report.wall_time = Clock::now() - start;
    return report;
}

namespace {

class ClosedSearch {
public:
    ClosedSearch(const TemporalGraph& g, const CompatibilityGraph& compat, std::uint64_t budget)
        : g_(g), compat_(compat), budget_(budget) {}

    void visit(VertexSet& chosen, std::size_t chosen_count, const VertexSet& candidates, bool grown) {
        if (++nodes_ > budget_) throw BudgetExceeded("closed search exceeded node budget", report());
        if (grown && chosen_count > best_.size() && is_closed_connected(g_, chosen)) best_ = chosen.members();
        if (candidates.none()) return;
        if (chosen_count + colour_bound(compat_, candidates) <= best_.size()) return;
        const Vertex v = candidates.first();
        chosen.set(v);
        visit(chosen, chosen_count + 1, candidates & compat_.neighbours(v), true);
        chosen.reset(v);
        VertexSet rest = candidates;
        rest.reset(v);
        visit(chosen, chosen_count, rest, false);
    }

    SolveReport report() const {
        SolveReport r;
        r.best_set = best_;
        r.size = best_.size();
        r.search_nodes = nodes_;
        return r;
    }

private:
    const TemporalGraph& g_;
    const CompatibilityGraph& compat_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Component best_;
};

}  // namespace

SolveReport max_closed_tcc(const TemporalGraph& g, const ClosedSearchOptions& options) {
    const auto start = Clock::now();
    const CompatibilityGraph compat = compatibility_graph(g, options.threads);
    const std::size_t n = g.vertex_count();
    ClosedSearch search(g, compat, options.node_budget);
    VertexSet chosen(n);
    search.visit(chosen, 0, VertexSet::full(n), false);
    SolveReport r = search.report();
    r.wall_time = Clock::now() - start;
    return r;
}

namespace {

void bron_kerbosch(const CompatibilityGraph& compat, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<Component>& out) {
    if (p.none() && x.none()) {
        out.push_back(r.members());
        return;
    }
    const VertexSet px = p | x;
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    px.for_each([&](Vertex u) {
        const std::size_t c = (p & compat.neighbours(u)).count();
        if (!have || c > best) {
            pivot = u;
            best = c;
            have = true;
        }
    });
    const VertexSet branch = p - compat.neighbours(pivot);
    branch.for_each([&](Vertex v) {
        r.set(v);
        bron_kerbosch(compat, r, p & compat.neighbours(v), x & compat.neighbours(v), out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

ComponentFamily maximal_cliques_pivot(const CompatibilityGraph& compat) {
    const std::size_t n = compat.size();
    std::vector<Component> out;
    VertexSet r(n);
    bron_kerbosch(compat, r, VertexSet::full(n), VertexSet(n), out);
    ComponentFamily f;
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end(), lex_less);
    f.sets = std::move(out);
    return f;
}

SolveReport oracle_max_open(const TemporalGraph& g) {
    const auto start = Clock::now();
    const ComponentFamily f = maximal_cliques_pivot(compatibility_graph(g));
    SolveReport r;
    for (const auto& s : f.sets)
        if (s.size() > r.size) {
            r.size = s.size();
            r.best_set = s;
        }
    r.search_nodes = f.sets.size();
    r.wall_time = Clock::now() - start;
    return r;
}

SolveReport oracle_max_closed(const TemporalGraph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap || n > 30)
        throw CapacityError("closed oracle limited to " + std::to_string(std::min<std::size_t>(cap, 30)) +
                            " vertices, graph has " + std::to_string(n));
    const auto start = Clock::now();
    const CompatibilityGraph compat = compatibility_graph(g);
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex u = 0; u < n; ++u) compat.neighbours(u).for_each([&](Vertex v) { adj[u] |= 1u << v; });

    SolveReport r;
    for (std::size_t size = n; size >= 1; --size) {
        // Gosper's hack: all n-bit masks with `size` bits, ascending.
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        const std::uint64_t end = std::uint64_t{1} << n;
        while (mask < end) {
            ++r.search_nodes;
            bool clique = true;
            for (std::uint64_t rest = mask; rest && clique; rest &= rest - 1) {
                const auto u = static_cast<Vertex>(std::countr_zero(rest));
                const std::uint32_t others = static_cast<std::uint32_t>(mask) & ~(1u << u);
                if ((adj[u] & others) != others) clique = false;
            }
            if (clique) {
                VertexSet x(n);
                for (std::uint64_t rest = mask; rest; rest &= rest - 1) x.set(static_cast<Vertex>(std::countr_zero(rest)));
                if (is_closed_connected(g, x)) {
                    r.best_set = x.members();
                    r.size = size;
                    r.wall_time = Clock::now() - start;
                    return r;
                }
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t rr = mask + c;
            mask = (((rr ^ mask) >> 2) / c) | rr;
        }
    }
    r.wall_time = Clock::now() - start;
    return r;
}

}  // namespace tcc
