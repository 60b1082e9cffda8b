#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sbond/graph.hpp"

namespace sbond {

/// Edge-list text: a header line "n m", then m lines "u v" (0-based, ASCII
/// decimal, LF-terminated). Blank trailing lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 (one graph, optional ">>graph6<<" header, optional trailing newline).
Graph parse_graph6(std::string_view text);
/// Canonical graph6 encoding without header or newline.
std::string to_graph6(const Graph& g);

/// Reads a graph from disk; ".g6" selects graph6, anything else the edge list.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace sbond
