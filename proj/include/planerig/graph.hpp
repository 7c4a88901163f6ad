#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace planerig {

// Vertices are 1-based: a graph of order n has vertex set {1, ..., n}.
using Vertex = int;

// Simple graphs are limited to 64 vertices so adjacency fits a machine word.
inline constexpr int kMaxVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // invariant: u < v

  auto operator<=>(const Edge&) const = default;
};

// Normalizes (a, b) to an Edge with u < v. Throws PreconditionError on a == b.
Edge make_edge(Vertex a, Vertex b);

std::string to_string(const Edge& e);

// A graph together with the map from the labels of the graph it was derived
// from. old_to_new[v] is the new label of old vertex v, or 0 if v was removed;
// index 0 is unused.
struct Relabeled;

// Simple undirected labeled graph, stored as a sorted edge set. Immutable
// after construction; every operation returns a new value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  // Duplicate edges collapse. Loops and out-of-range endpoints throw.
  Graph(int order, std::vector<Edge> edges);
  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  std::optional<std::size_t> edge_index(const Edge& e) const;

  int degree(Vertex v) const;
  std::vector<int> degrees() const;  // index v - 1
  int min_degree() const;
  int max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  // Bit (w - 1) is set for every neighbour w of v.
  std::uint64_t neighbor_mask(Vertex v) const;

  // Isolated vertices are allowed but carry no matroid elements.
  bool has_isolated_vertices() const;
  // v(G): the number of vertices incident with at least one edge.
  int incident_vertex_count() const;

  Graph with_edge(const Edge& e) const;
  Graph without_edge(const Edge& e) const;
  Graph with_vertex() const;  // appends isolated vertex order() + 1
  Graph edge_subgraph(const std::vector<std::size_t>& edge_indices) const;
  // Same edges viewed inside a larger vertex set.
  Graph with_order(int order) const;

  // Deletes v and relabels the rest to 1..n-1 preserving order.
  Relabeled without_vertex(Vertex v) const;
  // Drops isolated vertices and relabels to 1..v(G) preserving order.
  Relabeled compacted() const;
  // perm has size order() + 1; perm[old] = new. Must be a permutation of 1..n.
  Graph relabeled(const std::vector<Vertex>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

struct Relabeled {
  Graph graph;
  std::vector<Vertex> old_to_new;
};

namespace graphs {
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();
Graph triangular_prism();
}  // namespace graphs

}  // namespace planerig
