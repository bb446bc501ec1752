#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/graph.hpp"

namespace nsg {

// Result of reading an edge list: the graph, the label remap (original
// label -> internal 1-based id, in first-appearance order), and any
// non-fatal warnings (duplicate edges).
struct ParsedGraph {
    SimpleGraph graph;
    std::vector<std::pair<std::int64_t, int>> vertex_map;
    std::vector<std::string> warnings;
};

// Parses "u v" lines with non-negative integer labels. '#' starts a
// comment; blank lines are skipped. Labels may be sparse; they are
// remapped to 1..n in first-appearance order. Duplicate edges collapse
// with a warning; self-loops and malformed lines raise errors.
ParsedGraph parse_edge_list(std::string_view text);

ParsedGraph read_edge_list_file(const std::string& path);

// One "u v" line per edge, insertion order, internal 1-based labels.
// Re-parsing output of a previously parsed graph reproduces it exactly.
std::string write_edge_list(const SimpleGraph& g);

// FNV-1a over the canonical form (n plus the sorted edge set).
std::uint64_t graph_digest(const SimpleGraph& g);

}  // namespace nsg
