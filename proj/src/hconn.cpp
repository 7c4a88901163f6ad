#include "planerig/hconn.hpp"

#include "planerig/errors.hpp"

namespace planerig {

HMatrix::HMatrix(std::vector<Edge> row_edges, int order) : row_edges_(std::move(row_edges)), order_(order) {
  for (const auto& e : row_edges_)
    if (e.u < 1 || e.v > order_ || e.u >= e.v)
      throw PreconditionError("edge " + to_string(e) + " outside 1.." + std::to_string(order_));
}

std::vector<HEntry> HMatrix::row(std::size_t r) const {
  const auto [i, j] = row_edges_.at(r);
  const int ci = 2 * (i - 1), cj = 2 * (j - 1);
  return {{ci, 2 * (j - 1), +1}, {ci + 1, 2 * (j - 1) + 1, +1}, {cj, 2 * (i - 1), -1}, {cj + 1, 2 * (i - 1) + 1, -1}};
}

std::optional<HEntry> HMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& e : row(r))
    if (static_cast<std::size_t>(e.col) == c) return e;
  return std::nullopt;
}

PolyMatrix HMatrix::to_poly(std::int64_t characteristic) const {
  PolyMatrix m{PolyRing(std::max(2, 2 * order_), characteristic), cols(), {}};
  m.rows.assign(rows(), std::vector<Polynomial>(cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& e : row(r)) m.rows[r][static_cast<std::size_t>(e.col)] = m.ring.variable(e.variable, e.sign);
  return m;
}

HMatrix build_h_matrix(const Graph& g, int order) {
  if (order < g.incident_vertex_count() || order < 1) throw PreconditionError("order too small for graph");
  for (const auto& e : g.edges())
    if (e.v > order) throw PreconditionError("edge " + to_string(e) + " outside 1.." + std::to_string(order));
  return HMatrix(g.edges(), order);
}

namespace {

// Rows restricted to the given edges, with isolated vertices dropped; zero
// columns do not affect the rank.
PolyMatrix compact_rows(const Graph& g, const std::vector<std::size_t>& idx, std::int64_t characteristic) {
  std::vector<Edge> edges;
  edges.reserve(idx.size());
  for (auto i : idx) edges.push_back(g.edges()[i]);
  auto compact = Graph(g.order(), std::move(edges)).compacted().graph;
  return HMatrix(compact.edges(), std::max(1, compact.order())).to_poly(characteristic);
}

std::vector<std::size_t> all_rows(const Graph& g) {
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

}  // namespace

int h_rank_symbolic(const Graph& g, std::int64_t characteristic, std::size_t cap) {
  if (g.size() > cap)
    throw CapExceeded("symbolic rank is capped at " + std::to_string(cap) + " rows; graph has " +
                      std::to_string(g.size()));
  if (g.empty()) return 0;
  return symbolic_rank(compact_rows(g, all_rows(g), characteristic));
}

RandomizedRank h_rank_randomized(const Graph& g, const FieldConfig& fc, int trials, std::uint64_t seed) {
  if (g.empty()) return {0, true};
  return randomized_rank(compact_rows(g, all_rows(g), fc.characteristic), fc, trials, seed);
}

GraphVerdict h_independent(const Graph& g, std::int64_t characteristic, const VerdictOptions& opts) {
  auto verdict = row_independence(
      g.size(), [&](const std::vector<std::size_t>& idx) { return compact_rows(g, idx, characteristic); },
      characteristic, opts);
  GraphVerdict out{verdict.independent, verdict.method, verdict.rank, std::nullopt};
  if (!verdict.independent) out.witness = g.edge_subgraph(verdict.witness);
  return out;
}

}  // namespace planerig
