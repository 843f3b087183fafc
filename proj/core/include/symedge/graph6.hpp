#pragma once

#include <iosfwd>
#include <string>

#include "symedge/graph.hpp"

namespace symedge {

/// Parses one graph6 record (optionally preceded by the ">>graph6<<"
/// header). Throws parse_error with the byte offset on malformed input.
Graph parse_graph6(const std::string& text);

std::string emit_graph6(const Graph& g);

/// Edge-list text format: first line is n, then one "i j" line per edge
/// with 1 <= i < j <= n.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace symedge
