#pragma once

#include <string>
#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// Canonical labeling by individualization-refinement with orbit pruning from
// discovered automorphisms. Intended for small graphs (n <= ~20).
struct CanonicalForm {
  Graph graph;                  // isomorphic copy; equal for isomorphic inputs
  std::vector<Vertex> labeling; // labeling[old] = new, index 0 unused
};

CanonicalForm canonical_form(const Graph& g);

// graph6 of the canonical form. Isolated vertices are kept, so graphs of
// different order never share a key.
std::string canonical_graph6(const Graph& g);
// graph6 of the canonical form after dropping isolated vertices.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace planerig
