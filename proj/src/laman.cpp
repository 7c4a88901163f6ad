#include "planerig/laman.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "planerig/errors.hpp"

namespace planerig {

bool laman_count_ok(const Graph& g) {
  if (g.empty()) throw PreconditionError("laman_count_ok needs at least one edge");
  auto [h, map] = g.compacted();
  const int n = h.order();
  if (n > kLamanSubsetCap)
    throw CapExceeded("subset oracle is capped at " + std::to_string(kLamanSubsetCap) + " vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) adj[v - 1] = h.neighbor_mask(v);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int m = std::popcount(s);
    if (m < 2) continue;
    int twice = 0;
    for (auto t = s; t; t &= t - 1) twice += std::popcount(adj[std::countr_zero(t)] & s);
    if (twice / 2 > 2 * m - 3) return false;
  }
  return true;
}

PebbleGame::PebbleGame(int order)
    : pebbles_(static_cast<std::size_t>(order) + 1, 2), out_(static_cast<std::size_t>(order) + 1) {}

// Finds a free pebble reachable from target along edge directions (never
// passing through blocked), then reverses the path so target gains it.
bool PebbleGame::gather(Vertex target, Vertex blocked) {
  const auto n = pebbles_.size();
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{target};
  seen[target] = seen[blocked] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    if (x != target && pebbles_[x] > 0) {
      --pebbles_[x];
      ++pebbles_[target];
      // Reverse the edges parent[y] -> y along the path back to target.
      for (Vertex y = x; y != target; y = parent[y]) {
        Vertex p = parent[y];
        auto& outs = out_[p];
        outs.erase(std::find(outs.begin(), outs.end(), y));
        out_[y].push_back(p);
      }
      return true;
    }
    for (Vertex y : out_[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      stack.push_back(y);
    }
  }
  return false;
}

bool PebbleGame::gather_four(Vertex u, Vertex v) {
  while (pebbles_[u] < 2)
    if (!gather(u, v)) return false;
  while (pebbles_[v] < 2)
    if (!gather(v, u)) return false;
  return true;
}

bool PebbleGame::independent_with(const Edge& e) {
  if (e.u < 1 || e.v >= static_cast<Vertex>(pebbles_.size()) || e.u == e.v)
    throw PreconditionError("edge " + to_string(e) + " outside pebble game");
  return gather_four(e.u, e.v);
}

bool PebbleGame::try_add(const Edge& e) {
  if (!independent_with(e)) return false;
  --pebbles_[e.u];
  out_[e.u].push_back(e.v);
  ++accepted_;
  return true;
}

bool r_independent(const Graph& g) {
  PebbleGame game(g.order());
  for (const auto& e : g.edges())
    if (!game.try_add(e)) return false;
  return true;
}

int r_rank(const Graph& g) {
  PebbleGame game(g.order());
  for (const auto& e : g.edges()) game.try_add(e);
  return static_cast<int>(game.accepted());
}

bool r_circuit(const Graph& g) {
  if (g.empty() || r_independent(g)) return false;
  for (const auto& e : g.edges())
    if (!r_independent(g.without_edge(e))) return false;
  return true;
}

RBaseCertificate r_base(const Graph& g) {
  const auto v = g.incident_vertex_count();
  bool verified = v >= 2 && static_cast<int>(g.size()) == 2 * v - 3 && r_independent(g);
  return {g, verified};
}

Suppression suppress(const Graph& base, Vertex v) {
  if (!r_base(base).verified) throw PreconditionError("suppression needs an R-base");
  if (v < 1 || v > base.order() || base.degree(v) != 3)
    throw PreconditionError("suppression needs a degree-3 vertex");
  const auto nb = base.neighbors(v);
  const Edge candidates[] = {make_edge(nb[0], nb[1]), make_edge(nb[0], nb[2]), make_edge(nb[1], nb[2])};
  bool triangle = true;
  for (const auto& c : candidates) triangle = triangle && base.has_edge(c);
  if (triangle) throw PreconditionError("neighbours of the suppressed vertex form a triangle");

  for (const auto& c : candidates) {
    if (base.has_edge(c)) continue;
    auto [reduced, map] = base.with_edge(c).without_vertex(v);
    if (r_base(reduced).verified) return {std::move(reduced), c, std::move(map)};
  }
  throw std::logic_error("no suppression at vertex " + std::to_string(v) +
                         " yields an R-base; this contradicts the suppression theorem");
}

Graph fundamental_circuit(const Graph& base, const Edge& e) {
  if (!r_base(base).verified) throw PreconditionError("fundamental_circuit needs an R-base");
  const auto edge = make_edge(e.u, e.v);
  if (base.has_edge(edge)) throw PreconditionError("edge " + to_string(edge) + " already in the base");
  if (edge.v > base.order() || base.degree(edge.u) == 0 || base.degree(edge.v) == 0)
    throw PreconditionError("edge endpoints must be vertices of the base");
  Graph current = base.with_edge(edge);
  for (const auto& f : base.edges()) {
    auto smaller = current.without_edge(f);
    if (!r_independent(smaller)) current = std::move(smaller);
  }
  return current;
}

}  // namespace planerig
