#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planerig/graph.hpp"
#include "planerig/linear_matroid.hpp"

namespace planerig {

// Hyperconnectivity matroid H_{n,p}: the row matroid of the matrix whose row
// {i,j} (i < j) holds r_j, b_j, -r_i, -b_i in columns 2i-1, 2i, 2j-1, 2j.

struct HEntry {
  int col;       // 0-based column
  int variable;  // r_v is 2(v-1), b_v is 2(v-1)+1
  int sign;      // +1 or -1
};

class HMatrix {
 public:
  HMatrix(std::vector<Edge> row_edges, int order);

  std::size_t rows() const noexcept { return row_edges_.size(); }
  std::size_t cols() const noexcept { return 2 * static_cast<std::size_t>(order_); }
  int order() const noexcept { return order_; }
  const std::vector<Edge>& row_edges() const noexcept { return row_edges_; }
  // The four nonzero entries of row r, in column order.
  std::vector<HEntry> row(std::size_t r) const;
  // Entry (r, c) as a signed variable, or nullopt for zero.
  std::optional<HEntry> at(std::size_t r, std::size_t c) const;

  PolyMatrix to_poly(std::int64_t characteristic) const;

 private:
  std::vector<Edge> row_edges_;
  int order_;
};

inline constexpr std::size_t kDefaultSymbolicCap = 14;

HMatrix build_h_matrix(const Graph& g, int order);

// Exact rank over the rational function field of the given characteristic.
// Throws CapExceeded when |G| > cap.
int h_rank_symbolic(const Graph& g, std::int64_t characteristic, std::size_t cap = kDefaultSymbolicCap);

RandomizedRank h_rank_randomized(const Graph& g, const FieldConfig& fc, int trials, std::uint64_t seed);

// Independence verdict for a set of graph edges under a linear matroid.
struct GraphVerdict {
  bool independent = false;
  Method method = Method::Probabilistic;
  int rank = 0;
  // Minimal dependent subgraph backing a negative verdict.
  std::optional<Graph> witness;
};

GraphVerdict h_independent(const Graph& g, std::int64_t characteristic, const VerdictOptions& opts = {});

}  // namespace planerig
