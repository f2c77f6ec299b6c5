#include "tcc/reachability.hpp"

#include <algorithm>
#include <thread>

#include "tcc/errors.hpp"

namespace tcc {

std::vector<Time> propagate_arrivals(const TemporalGraph& g, std::vector<Time> arrival, const VertexSet* within) {
    const auto& arcs = g.arcs();
    const bool strict = g.strict();
    auto usable = [&](const Arc& a) { return !within || (within->test(a.from) && within->test(a.to)); };

    std::size_t lo = 0;
    while (lo < arcs.size()) {
        const Time t = arcs[lo].time;
        std::size_t hi = lo;
        while (hi < arcs.size() && arcs[hi].time == t) ++hi;
        if (strict) {
            // Arrivals written at t fail the `< t` test, so in-place update matches two-phase semantics.
            for (std::size_t i = lo; i < hi; ++i) {
                const Arc& a = arcs[i];
                if (arrival[a.from] < t && arrival[a.to] > t && usable(a)) arrival[a.to] = t;
            }
        } else {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = lo; i < hi; ++i) {
                    const Arc& a = arcs[i];
                    if (arrival[a.from] <= t && arrival[a.to] > t && usable(a)) {
                        arrival[a.to] = t;
                        changed = true;
                    }
                }
            }
        }
        lo = hi;
    }
    return arrival;
}

std::vector<Time> earliest_arrival(const TemporalGraph& g, Vertex source) {
    if (source >= g.vertex_count()) throw ValidationError("source " + std::to_string(source) + " out of range");
    std::vector<Time> arrival(g.vertex_count(), kUnreached);
    arrival[source] = kStart;
    return propagate_arrivals(g, std::move(arrival));
}

bool ReachMatrix::all_true() const {
    for (const auto& r : rows_)
        if (r.count() != r.size()) return false;
    return true;
}

ReachMatrix reach_matrix(const TemporalGraph& g, unsigned threads) {
    const std::size_t n = g.vertex_count();
    ReachMatrix m(n);
    auto fill_row = [&](Vertex u) {
        std::vector<Time> arrival(n, kUnreached);
        arrival[u] = kStart;
        arrival = propagate_arrivals(g, std::move(arrival));
        for (Vertex v = 0; v < n; ++v)
            if (arrival[v] != kUnreached) m.row(u).set(v);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        for (Vertex u = 0; u < n; ++u) fill_row(u);
        return m;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (Vertex u = w; u < n; u += threads) fill_row(u);
        });
    for (auto& t : pool) t.join();
    return m;
}

ReachMatrix reach_matrix_within(const TemporalGraph& g, const VertexSet& X) {
    const std::size_t n = g.vertex_count();
    if (X.size() != n) throw ValidationError("vertex set universe does not match graph");
    const auto members = X.members();
    ReachMatrix m(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<Time> arrival(n, kUnreached);
        arrival[members[i]] = kStart;
        arrival = propagate_arrivals(g, std::move(arrival), &X);
        for (std::size_t j = 0; j < members.size(); ++j)
            if (arrival[members[j]] != kUnreached) m.row(static_cast<Vertex>(i)).set(static_cast<Vertex>(j));
    }
    return m;
}

std::size_t CompatibilityGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& r : adj_) c += r.count();
    return c / 2;
}

CompatibilityGraph compatibility_graph(const ReachMatrix& reach) {
    const std::size_t n = reach.size();
    CompatibilityGraph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (reach.reaches(u, v) && reach.reaches(v, u)) {
                c.neighbours(u).set(v);
                c.neighbours(v).set(u);
            }
    return c;
}

CompatibilityGraph compatibility_graph(const TemporalGraph& g, unsigned threads) {
    return compatibility_graph(reach_matrix(g, threads));
}

}  // namespace tcc
