#include "planerig/graph.hpp"

#include <algorithm>
#include <bit>

#include "planerig/errors.hpp"

namespace planerig {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw PreconditionError("negative vertex count");
  if (order > kMaxVertices)
    throw CapExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::vector<Edge> edges) : Graph(order) {
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > order)
      throw PreconditionError("edge " + to_string(e) + " outside vertex range 1.." +
                              std::to_string(order));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
    adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [a, b] : edges) out.push_back(Edge{a, b});
        return out;
      }()) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > order_)
    throw PreconditionError("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(order_));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > order_ || b > order_ || a == b) return false;
  return (adj_[a - 1] >> (b - 1)) & 1U;
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[v - 1]);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(order_));
  for (int v = 0; v < order_; ++v) out[v] = std::popcount(adj_[v]);
  return out;
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : kMaxVertices;
  for (auto mask : adj_) best = std::min(best, std::popcount(mask));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (auto mask : adj_) best = std::max(best, std::popcount(mask));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (auto mask = adj_[v - 1]; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  check_vertex(v);
  return adj_[v - 1];
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adj_.begin(), adj_.end(), [](auto m) { return m == 0; });
}

int Graph::incident_vertex_count() const {
  return static_cast<int>(std::count_if(adj_.begin(), adj_.end(), [](auto m) { return m != 0; }));
}

Graph Graph::with_edge(const Edge& e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Graph(order_, std::move(edges));
}

Graph Graph::without_edge(const Edge& e) const {
  auto edges = edges_;
  auto norm = make_edge(e.u, e.v);
  edges.erase(std::remove(edges.begin(), edges.end(), norm), edges.end());
  return Graph(order_, std::move(edges));
}

Graph Graph::with_vertex() const { return Graph(order_ + 1, edges_); }

Graph Graph::edge_subgraph(const std::vector<std::size_t>& edge_indices) const {
  std::vector<Edge> edges;
  edges.reserve(edge_indices.size());
  for (auto i : edge_indices) edges.push_back(edges_.at(i));
  return Graph(order_, std::move(edges));
}

Graph Graph::with_order(int order) const { return Graph(order, edges_); }

Relabeled Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> map(static_cast<std::size_t>(order_) + 1, 0);
  for (Vertex w = 1, next = 1; w <= order_; ++w)
    if (w != v) map[w] = next++;
  std::vector<Edge> edges;
  for (const auto& e : edges_)
    if (e.u != v && e.v != v) edges.push_back(Edge{map[e.u], map[e.v]});
  return {Graph(order_ - 1, std::move(edges)), std::move(map)};
}

Relabeled Graph::compacted() const {
  std::vector<Vertex> map(static_cast<std::size_t>(order_) + 1, 0);
  int next = 1;
  for (Vertex w = 1; w <= order_; ++w)
    if (adj_[w - 1]) map[w] = next++;
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(Edge{map[e.u], map[e.v]});
  return {Graph(next - 1, std::move(edges)), std::move(map)};
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != static_cast<std::size_t>(order_) + 1)
    throw PreconditionError("relabeling has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v = 1; v <= order_; ++v) {
    if (perm[v] < 1 || perm[v] > order_ || seen[perm[v]])
      throw PreconditionError("relabeling is not a permutation");
    seen[perm[v]] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(Edge{perm[e.u], perm[e.v]});
  return Graph(order_, std::move(edges));
}

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= a; ++i)
    for (Vertex j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
  return Graph(a + b, std::move(edges));
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.push_back(make_edge(i, i % n + 1));
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 2; i <= leaves + 1; ++i) edges.push_back({1, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen() {
  // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i + 1, (i + 1) % 5 + 1));
    edges.push_back(make_edge(i + 1, i + 6));
    edges.push_back(make_edge(i + 6, (i + 2) % 5 + 6));
  }
  return Graph(10, std::move(edges));
}

Graph triangular_prism() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}});
}

}  // namespace graphs

}  // namespace planerig
