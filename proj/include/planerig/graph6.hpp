#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// graph6: header N(n), then the upper triangle of the adjacency matrix in
// column-major order packed six bits per byte, every byte offset by 63.
// Throws ParseError (carrying the byte offset) on malformed input.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Newline-delimited graph6. Blank lines and an optional ">>graph6<<" prefix
// are skipped; ParseError offsets are relative to the whole stream.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::string write_graph6_lines(const std::vector<Graph>& graphs);

}  // namespace planerig
