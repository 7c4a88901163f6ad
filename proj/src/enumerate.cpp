#include "planerig/enumerate.hpp"

#include <map>
#include <string>

#include "planerig/canonical.hpp"
#include "planerig/graph6.hpp"
#include "planerig/errors.hpp"

namespace planerig {
namespace {

std::vector<Graph> flatten(const std::vector<std::map<std::string, Graph>>& levels) {
  std::vector<Graph> out;
  for (const auto& level : levels)
    for (const auto& [key, g] : level) out.push_back(g);
  return out;
}

}  // namespace

std::vector<Graph> graphs_on(int n) {
  if (n < 0 || n > 12) throw CapExceeded("graphs_on supports 0 <= n <= 12");
  std::vector<std::map<std::string, Graph>> levels(1);
  Graph empty(n);
  levels[0].emplace(canonical_graph6(empty), canonical_form(empty).graph);
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : levels.back())
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) {
          if (g.has_edge(i, j)) continue;
          auto h = g.with_edge({i, j});
          auto form = canonical_form(h);
          auto k = emit_graph6(form.graph);
          next.try_emplace(std::move(k), std::move(form.graph));
        }
    levels.push_back(std::move(next));
  }
  return flatten(levels);
}

std::vector<Graph> connected_graphs_up_to(int max_edges) {
  if (max_edges < 1) return {};
  if (max_edges > 12) throw CapExceeded("connected_graphs_up_to supports at most 12 edges");
  std::vector<std::map<std::string, Graph>> levels(1);
  Graph edge(2, {{1, 2}});
  levels[0].emplace(canonical_graph6(edge), edge);
  for (int m = 2; m <= max_edges; ++m) {
    std::map<std::string, Graph> next;
    auto add = [&](const Graph& h) {
      auto form = canonical_form(h);
      auto k = emit_graph6(form.graph);
      next.try_emplace(std::move(k), std::move(form.graph));
    };
    for (const auto& [key, g] : levels.back()) {
      const int n = g.order();
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j)
          if (!g.has_edge(i, j)) add(g.with_edge({i, j}));
        add(g.with_vertex().with_edge({i, n + 1}));
      }
    }
    levels.push_back(std::move(next));
  }
  return flatten(levels);
}

void for_each_labeled_graph(int n, const std::function<void(std::uint32_t, const Graph&)>& f) {
  std::vector<Edge> all;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) all.push_back({i, j});
  if (all.size() > 24) throw CapExceeded("labeled enumeration supports n <= 7");
  const std::uint32_t total = std::uint32_t{1} << all.size();
  std::vector<Edge> edges;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(all[i]);
    f(mask, Graph(n, edges));
  }
}

}  // namespace planerig
