#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "planerig/canonical.hpp"
#include "planerig/errors.hpp"
#include "planerig/matroidlab.hpp"
#include "planerig/structure.hpp"

namespace planerig {

namespace {

void check_cubic_order(int n) {
  if (n % 2 != 0) throw PreconditionError("cubic graphs need an even number of vertices");
  if (n < 4 || n > 12) throw CapExceeded("cubic generation supports 4 <= n <= 12");
}

// Labeled backtracking: vertices are filled in order, each new neighbour is
// either already touched or the next untouched vertex, and a vertex reached
// untouched would start a new component so it is pruned.
class CubicSearch {
 public:
  explicit CubicSearch(int n) : n_(n), deg_(static_cast<std::size_t>(n) + 1, 0), adj_(static_cast<std::size_t>(n) + 1, 0) {}

  std::vector<Graph> run() {
    touched_ = 1;
    vertex(1);
    std::vector<Graph> out;
    for (auto& [key, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  void vertex(Vertex v) {
    if (v > n_) {
      Graph g(n_, edges_);
      std::string key = canonical_graph6(g);
      found_.emplace(std::move(key), canonical_form(g).graph);
      return;
    }
    if (v > 1 && deg_[static_cast<std::size_t>(v)] == 0) return;
    fill(v, v + 1);
  }

  void fill(Vertex v, Vertex from) {
    if (deg_[static_cast<std::size_t>(v)] == 3) {
      vertex(v + 1);
      return;
    }
    const Vertex limit = std::min(n_, touched_ + 1);
    for (Vertex w = from; w <= limit; ++w) {
      if (deg_[static_cast<std::size_t>(w)] == 3 || (adj_[static_cast<std::size_t>(v)] >> w & 1U)) continue;
      const Vertex saved = touched_;
      touched_ = std::max(touched_, w);
      ++deg_[static_cast<std::size_t>(v)];
      ++deg_[static_cast<std::size_t>(w)];
      adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
      adj_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << v;
      edges_.push_back({v, w});
      fill(v, w + 1);
      edges_.pop_back();
      adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << w);
      adj_[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << v);
      --deg_[static_cast<std::size_t>(v)];
      --deg_[static_cast<std::size_t>(w)];
      touched_ = saved;
    }
  }

  int n_;
  Vertex touched_ = 0;
  std::vector<int> deg_;
  std::vector<std::uint64_t> adj_;  // bit w set for neighbour w
  std::vector<Edge> edges_;
  std::map<std::string, Graph> found_;
};

// Per-vertex invariant: degree, triangles through v, sorted neighbour degrees.
using VertexKey = std::vector<int>;

std::vector<VertexKey> vertex_keys(const Graph& g) {
  std::vector<VertexKey> keys;
  for (Vertex v = 1; v <= g.order(); ++v) {
    VertexKey k{g.degree(v), 0};
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) k[1] += g.has_edge(nb[i], nb[j]);
    std::vector<int> nd;
    for (Vertex w : nb) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    k.insert(k.end(), nd.begin(), nd.end());
    keys.push_back(std::move(k));
  }
  return keys;
}

std::vector<VertexKey> graph_key(const Graph& g) {
  auto keys = vertex_keys(g);
  std::sort(keys.begin(), keys.end());
  keys.push_back({g.order(), static_cast<int>(g.size())});
  return keys;
}

}  // namespace

bool isomorphic_backtrack(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto ka = vertex_keys(a), kb = vertex_keys(b);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const int n = a.order();
  std::vector<Vertex> map(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<bool(Vertex)> go = [&](Vertex v) -> bool {
    if (v > n) return true;
    for (Vertex w = 1; w <= n; ++w) {
      if (used[static_cast<std::size_t>(w)] || ka[static_cast<std::size_t>(v - 1)] != kb[static_cast<std::size_t>(w - 1)]) continue;
      bool ok = true;
      for (Vertex u = 1; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (go(v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  return go(1);
}

std::vector<Graph> generate_connected_cubic(int n) {
  check_cubic_order(n);
  return CubicSearch(n).run();
}

std::vector<Graph> enumerate_cubic_orderly(int n) {
  check_cubic_order(n);
  // Level k holds subcubic graphs on k vertices, one per isomorphism class,
  // that can still be completed to a cubic graph on n vertices.
  std::vector<Graph> level{Graph(0)};
  for (int k = 0; k < n; ++k) {
    const int future = n - (k + 1);
    std::map<std::vector<VertexKey>, std::vector<Graph>> buckets;
    for (const auto& g : level) {
      std::vector<Vertex> open;
      for (Vertex v = 1; v <= k; ++v)
        if (g.degree(v) < 3) open.push_back(v);
      const std::size_t m = open.size();
      for (std::uint32_t s = 0; s < (1U << m); ++s) {
        if (std::popcount(s) > 3) continue;
        std::vector<Edge> edges = g.edges();
        for (std::size_t i = 0; i < m; ++i)
          if (s >> i & 1U) edges.push_back({open[i], k + 1});
        Graph h(k + 1, std::move(edges));
        // Deficits must be coverable by the remaining vertices: each future
        // vertex gives each current vertex at most one edge, and the rest of
        // their degree goes to edges among themselves.
        int total = 0;
        bool ok = true;
        for (Vertex v = 1; v <= k + 1 && ok; ++v) {
          const int d = 3 - h.degree(v);
          ok = d <= future;
          total += d;
        }
        const int inner2 = 3 * future - total;
        if (!ok || inner2 < 0 || inner2 % 2 || inner2 / 2 > future * (future - 1) / 2) continue;
        auto& bucket = buckets[graph_key(h)];
        if (std::none_of(bucket.begin(), bucket.end(), [&](const Graph& x) { return isomorphic_backtrack(x, h); }))
          bucket.push_back(std::move(h));
      }
    }
    level.clear();
    for (auto& [key, graphs] : buckets)
      for (auto& g : graphs) level.push_back(std::move(g));
  }
  std::vector<Graph> out;
  for (auto& g : level)
    if (is_regular(g, 3) && is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace planerig
