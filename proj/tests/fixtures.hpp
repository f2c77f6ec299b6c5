#pragma once

#include <initializer_list>
#include <vector>

#include "tcc/temporal_graph.hpp"

namespace fx {

inline tcc::TemporalGraph make(std::size_t n, std::initializer_list<tcc::EdgeSpec> edges, bool directed = true,
                               bool strict = true) {
    std::vector<tcc::EdgeSpec> es(edges);
    return tcc::build_graph(n, std::span<const tcc::EdgeSpec>(es), tcc::GraphFlags{directed, strict});
}

// The directed strict triangle 0->1@1, 1->2@2, 2->0@3.
inline tcc::TemporalGraph W() { return make(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}); }

inline tcc::TemporalGraph bipair() { return make(2, {{0, 1, 1}, {1, 0, 2}}); }

inline tcc::TemporalGraph empty(std::size_t n) { return make(n, {}); }

inline std::vector<tcc::TemporalGraph> all_modes(std::size_t n, std::initializer_list<tcc::EdgeSpec> edges) {
    std::vector<tcc::TemporalGraph> out;
    for (bool d : {true, false})
        for (bool s : {true, false}) out.push_back(make(n, edges, d, s));
    return out;
}

}  // namespace fx
