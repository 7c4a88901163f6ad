#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "planerig/graph.hpp"

namespace testing_oracles {

using planerig::Edge;
using planerig::Graph;
using planerig::Vertex;

// Adjacency bitmask over the upper triangle after applying perm (0-based).
inline std::uint64_t permuted_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (const auto& e : g.edges()) {
    int a = perm[static_cast<std::size_t>(e.u - 1)], b = perm[static_cast<std::size_t>(e.v - 1)];
    if (a > b) std::swap(a, b);
    const int idx = b * (b - 1) / 2 + a;
    code |= std::uint64_t{1} << idx;
  }
  (void)n;
  return code;
}

// Smallest code over all relabelings; n <= 8.
inline std::uint64_t min_code(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, permuted_code(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

inline Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return g.relabeled(perm);
}

// Labeled graph on 1..n from a mask over K_n's edges in lex order.
inline Graph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j, ++k)
      if (mask >> k & 1U) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}


}  // namespace testing_oracles
