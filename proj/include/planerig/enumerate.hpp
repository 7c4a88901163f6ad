#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// Every graph on exactly n vertices up to isomorphism (isolated vertices
// allowed), ordered by edge count and then canonical graph6.
std::vector<Graph> graphs_on(int n);

// Every connected graph with 1..max_edges edges and no isolated vertices, up
// to isomorphism, ordered by edge count and then canonical graph6.
std::vector<Graph> connected_graphs_up_to(int max_edges);

// Calls f for each of the 2^C(n,2) labeled graphs on {1..n}; bit i of the
// mask selects the i-th edge of K_n in lexicographic order.
void for_each_labeled_graph(int n, const std::function<void(std::uint32_t mask, const Graph&)>& f);

}  // namespace planerig
