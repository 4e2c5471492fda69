#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "bei/graph.hpp"

namespace bei {

/// Parses the edge-list text format:
///
///     # comment
///     n 4
///     1 2
///     1 3
///
/// Blank lines and text after '#' are ignored. Throws InputError with a
/// "line N:" prefix on malformed input.
SimpleGraph parse_edge_list(std::istream& in);
SimpleGraph parse_edge_list(std::string_view text);
SimpleGraph read_edge_list_file(const std::string& path);

std::string format_edge_list(const SimpleGraph& g);

/// Compact one-line form "n:u-v,u-v,...", e.g. "4:1-2,1-3,1-4".
SimpleGraph parse_inline_graph(std::string_view spec);
std::string format_inline_graph(const SimpleGraph& g);

}  // namespace bei
