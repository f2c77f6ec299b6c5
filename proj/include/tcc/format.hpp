#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/components.hpp"

namespace tcc {

/// "{0,1,2}"
std::string format_set(std::span<const Vertex> set);
/// One set per line.
std::string format_family(const ComponentFamily& family);
/// "size=<k>\n{...}\n"
std::string format_report(const SolveReport& report);

/// Parses "0,3,1" (empty string gives an empty list).
std::vector<Vertex> parse_vertex_list(std::string_view text);

}  // namespace tcc
