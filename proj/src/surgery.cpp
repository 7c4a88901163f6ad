#include "planerig/surgery.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "planerig/errors.hpp"

namespace planerig {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v < 1 || v > g.order())
    throw PreconditionError("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
}

}  // namespace

Graph zero_extension(const Graph& g, Vertex u, Vertex w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (u == w) throw PreconditionError("0-extension needs two distinct vertices");
  const Vertex x = g.order() + 1;
  auto edges = g.edges();
  edges.push_back(make_edge(u, x));
  edges.push_back(make_edge(w, x));
  return Graph(x, std::move(edges));
}

Graph one_extension(const Graph& g, Vertex u, Vertex v, Vertex w) {
  require_vertex(g, w);
  if (!g.has_edge(u, v))
    throw PreconditionError("1-extension: " + to_string(make_edge(u, v)) + " is not an edge");
  if (w == u || w == v) throw PreconditionError("1-extension: w must differ from u and v");
  const Vertex x = g.order() + 1;
  auto edges = g.without_edge(make_edge(u, v)).edges();
  edges.push_back(make_edge(u, x));
  edges.push_back(make_edge(v, x));
  edges.push_back(make_edge(w, x));
  return Graph(x, std::move(edges));
}

Graph clone_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  const Vertex x = g.order() + 1;
  auto edges = g.edges();
  for (Vertex w : g.neighbors(v)) edges.push_back(make_edge(w, x));
  return Graph(x, std::move(edges));
}

const std::vector<Vertex>& TwinReport::class_of(Vertex v) const {
  for (const auto& c : classes)
    if (std::find(c.begin(), c.end(), v) != c.end()) return c;
  throw PreconditionError("vertex " + std::to_string(v) + " is in no twin class");
}

TwinReport twin_classes(const Graph& g) {
  TwinReport report;
  std::map<std::uint64_t, std::size_t> by_neighborhood;
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto [it, inserted] = by_neighborhood.try_emplace(g.neighbor_mask(v), report.classes.size());
    if (inserted) report.classes.emplace_back();
    report.classes[it->second].push_back(v);
  }
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == 3)
      report.tw3 = std::max(report.tw3, static_cast<int>(report.class_of(v).size()) - 1);
  return report;
}

bool is_2_degenerate(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) adj[v - 1] = g.neighbor_mask(v);
  std::uint64_t alive = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!((alive >> v) & 1U)) continue;
      if (std::popcount(adj[v] & alive) <= 2) {
        alive &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return alive == 0;
}

}  // namespace planerig
