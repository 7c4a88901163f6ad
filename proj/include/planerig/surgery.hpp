#pragma once

#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// Henneberg moves and twin operations. The new vertex is always order() + 1.

// Adds a vertex adjacent to exactly u and w.
Graph zero_extension(const Graph& g, Vertex u, Vertex w);
// Adds a vertex adjacent to u, v, w and deletes the edge uv.
Graph one_extension(const Graph& g, Vertex u, Vertex v, Vertex w);
// G (+) v: adds a twin of v.
Graph clone_vertex(const Graph& g, Vertex v);

struct TwinReport {
  // Twin classes in order of their smallest member; members ascending.
  std::vector<std::vector<Vertex>> classes;
  // Max number of twins (excluding itself) over degree-3 vertices, 0 if none.
  int tw3 = 0;

  const std::vector<Vertex>& class_of(Vertex v) const;
};

// Vertices with identical open neighbourhoods are twins (hence non-adjacent).
TwinReport twin_classes(const Graph& g);

// True iff repeatedly deleting vertices of degree <= 2 empties the graph.
bool is_2_degenerate(const Graph& g);

}  // namespace planerig
