#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tcc/reachability.hpp"

using namespace tcc;

namespace {

oracle::Matrix to_matrix(const ReachMatrix& r) {
    oracle::Matrix m(r.size(), std::vector<bool>(r.size()));
    for (Vertex u = 0; u < r.size(); ++u)
        for (Vertex v = 0; v < r.size(); ++v) m[u][v] = r.reaches(u, v);
    return m;
}

}  // namespace

TEST_CASE("earliest arrival examples") {
    CHECK(earliest_arrival(fx::W(), 0) == std::vector<Time>{kStart, 1, 2});
    CHECK(earliest_arrival(fx::empty(1), 0) == std::vector<Time>{kStart});
    const auto ns = fx::make(3, {{0, 1, 5}, {1, 2, 5}}, true, false);
    CHECK(earliest_arrival(ns, 0) == std::vector<Time>{kStart, 5, 5});
    const auto st = fx::make(3, {{0, 1, 5}, {1, 2, 5}}, true, true);
    CHECK(earliest_arrival(st, 0) == std::vector<Time>{kStart, 5, kUnreached});
}

TEST_CASE("non-strict chains of equal labels in any edge order") {
    // 3->2, 2->1, 1->0 all at time 4: a single relaxation pass in id order would miss this
    const auto g = fx::make(4, {{3, 2, 4}, {2, 1, 4}, {1, 0, 4}}, true, false);
    CHECK(earliest_arrival(g, 3) == std::vector<Time>{4, 4, 4, kStart});
}

TEST_CASE("reach matrix examples") {
    const auto r = reach_matrix(fx::W());
    CHECK(to_matrix(r) == oracle::Matrix{{1, 1, 1}, {1, 1, 1}, {1, 0, 1}});
    const auto id = reach_matrix(fx::empty(3));
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) CHECK(id.reaches(u, v) == (u == v));
    CHECK(reach_matrix(fx::make(2, {{0, 1, 1}}, false)).all_true());
}

TEST_CASE("reach matrix within") {
    const auto w = fx::W();
    const auto r = reach_matrix_within(w, VertexSet(3, {0, 1}));
    CHECK(r.size() == 2);
    CHECK(r.reaches(0, 1));
    CHECK_FALSE(r.reaches(1, 0));
    CHECK(reach_matrix_within(w, VertexSet::full(3)) == reach_matrix(w));
    const auto one = reach_matrix_within(w, VertexSet(3, {2}));
    CHECK(one.size() == 1);
    CHECK(one.reaches(0, 0));
}

TEST_CASE("compatibility graph examples") {
    const auto c = compatibility_graph(fx::W());
    CHECK(c.edge_count() == 2);
    CHECK(c.adjacent(0, 1));
    CHECK(c.adjacent(0, 2));
    CHECK_FALSE(c.adjacent(1, 2));
    CHECK(compatibility_graph(fx::empty(3)).edge_count() == 0);
    CHECK(compatibility_graph(fx::bipair()).adjacent(0, 1));
}

TEST_CASE("streaming reachability equals simple-path enumeration") {
    Rng rng(2024);
    for (int i = 0; i < 400; ++i) {
        const GraphFlags flags{i % 2 == 0, i % 4 < 2};
        const std::size_t n = 1 + rng.below(7);
        const auto g = oracle::random_graph(rng, n, rng.below(3 * n + 1), 1 + static_cast<Time>(rng.below(6)), flags);
        CHECK(to_matrix(reach_matrix(g)) == oracle::simple_path_reach(g));
        CHECK(reach_matrix(g, 3) == reach_matrix(g));
    }
}

TEST_CASE("adding an edge never removes reachability") {
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const GraphFlags flags{i % 2 == 0, i % 4 < 2};
        const auto g = oracle::random_graph(rng, 6, 10, 5, flags);
        auto edges = g.edges();
        const Vertex u = static_cast<Vertex>(rng.below(6));
        const Vertex v = static_cast<Vertex>((u + 1 + rng.below(5)) % 6);
        edges.push_back({u, v, static_cast<Time>(rng.below(6))});
        std::sort(edges.begin(), edges.end(), chronological_less);
        if (!flags.directed)
            for (auto& e : edges)
                if (e.tail > e.head) std::swap(e.tail, e.head);
        std::sort(edges.begin(), edges.end(), chronological_less);
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        const auto bigger = build_graph(6, std::span<const TemporalEdge>(edges), flags);
        const auto a = reach_matrix(g), b = reach_matrix(bigger);
        for (Vertex x = 0; x < 6; ++x) CHECK(a.row(x).is_subset_of(b.row(x)));
    }
}

TEST_CASE("strict reachability is contained in non-strict") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const bool directed = i % 2 == 0;
        const auto s = oracle::random_graph(rng, 8, 14, 4, {directed, true});
        const auto ns = build_graph(8, std::span<const TemporalEdge>(s.edges()), {directed, false});
        const auto a = reach_matrix(s), b = reach_matrix(ns);
        for (Vertex x = 0; x < 8; ++x) CHECK(a.row(x).is_subset_of(b.row(x)));
    }
}

TEST_CASE("within the full set equals the plain matrix") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_graph(rng, 9, 20, 6, {i % 2 == 0, i % 3 == 0});
        CHECK(reach_matrix_within(g, VertexSet::full(9)) == reach_matrix(g));
    }
}

TEST_CASE("within a subset equals reachability of the induced subgraph") {
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto g = oracle::random_graph(rng, 7, 16, 5, {i % 2 == 0, i % 3 == 0});
        VertexSet keep(7);
        for (Vertex v = 0; v < 7; ++v)
            if (rng.coin(1, 2)) keep.set(v);
        if (keep.none()) keep.set(0);
        const auto [sub, map] = induced_subgraph(g, keep);
        CHECK(to_matrix(reach_matrix_within(g, keep)) == oracle::simple_path_reach(sub));
    }
}
