#include "planerig/structure.hpp"

#include <bit>

namespace planerig {
namespace {

std::uint64_t incident_mask(const Graph& g) {
  std::uint64_t m = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.neighbor_mask(v)) m |= std::uint64_t{1} << (v - 1);
  return m;
}

}  // namespace

std::vector<std::uint64_t> components_avoiding(const Graph& g, std::uint64_t removed) {
  std::vector<std::uint64_t> out;
  std::uint64_t todo = incident_mask(g) & ~removed;
  while (todo) {
    std::uint64_t comp = todo & (~todo + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t next = g.neighbor_mask(v + 1) & ~removed & ~comp;
      comp |= next;
      frontier |= next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

std::vector<std::uint64_t> components(const Graph& g) { return components_avoiding(g, 0); }

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_2_connected(const Graph& g) {
  if (!is_connected(g) || g.incident_vertex_count() < 3) return false;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!g.neighbor_mask(v)) continue;
    if (components_avoiding(g, std::uint64_t{1} << (v - 1)).size() != 1) return false;
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> two_vertex_separators(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (!g.neighbor_mask(u)) continue;
    for (Vertex w = u + 1; w <= g.order(); ++w) {
      if (!g.neighbor_mask(w)) continue;
      auto removed = (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (w - 1));
      if (components_avoiding(g, removed).size() >= 2) out.emplace_back(u, w);
    }
  }
  return out;
}

bool is_forest(const Graph& g) {
  std::size_t vertices = 0;
  auto comps = components(g);
  for (auto c : comps) vertices += std::popcount(c);
  return g.size() + comps.size() == vertices;
}

bool is_regular(const Graph& g, int degree) {
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) != degree) return false;
  return g.order() > 0;
}

bool is_properly_subcubic(const Graph& g) {
  if (g.max_degree() > 3) return false;
  for (Vertex v = 1; v <= g.order(); ++v) {
    int d = g.degree(v);
    if (d > 0 && d <= 2) return true;
  }
  return false;
}

}  // namespace planerig
