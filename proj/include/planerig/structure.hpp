#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// Connectivity queries ignore isolated vertices unless stated otherwise.

// Vertex masks (bit v - 1) of the connected components among non-isolated vertices.
std::vector<std::uint64_t> components(const Graph& g);
std::vector<std::uint64_t> components_avoiding(const Graph& g, std::uint64_t removed);
bool is_connected(const Graph& g);
// Connected, at least 3 vertices and no cut vertex.
bool is_2_connected(const Graph& g);
// All pairs {u, w} of non-isolated vertices whose removal disconnects the rest.
std::vector<std::pair<Vertex, Vertex>> two_vertex_separators(const Graph& g);
bool is_forest(const Graph& g);
bool is_regular(const Graph& g, int degree);
// Max degree <= 3 with at least one non-isolated vertex of degree <= 2.
bool is_properly_subcubic(const Graph& g);

}  // namespace planerig
