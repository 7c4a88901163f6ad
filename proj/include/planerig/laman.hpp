#pragma once

#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

// Generic plane rigidity matroid R_n, handled purely combinatorially.

// Subset-count oracle: every vertex subset of size m >= 2 induces at most
// 2m - 3 edges. Exponential; throws CapExceeded beyond 10 non-isolated
// vertices and PreconditionError on an edgeless graph.
bool laman_count_ok(const Graph& g);

inline constexpr int kLamanSubsetCap = 10;

// Incremental (2,3)-pebble game. try_add() accepts an edge iff the accepted
// set stays (2,3)-sparse; rejected edges leave the state unchanged.
class PebbleGame {
 public:
  explicit PebbleGame(int order);

  bool try_add(const Edge& e);
  // Would e be accepted? Pebbles may move but the accepted set is unchanged.
  bool independent_with(const Edge& e);
  std::size_t accepted() const noexcept { return accepted_; }

 private:
  bool gather(Vertex target, Vertex blocked);
  bool gather_four(Vertex u, Vertex v);

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;  // out_[x]: heads of edges holding x's pebble
  std::size_t accepted_ = 0;
};

bool r_independent(const Graph& g);
// Greedy in edge order.
int r_rank(const Graph& g);
// Dependent, and independent after deleting any single edge.
bool r_circuit(const Graph& g);

struct RBaseCertificate {
  Graph graph;
  bool verified = false;
};

// |G| = 2 v(G) - 3 and G is R-independent.
RBaseCertificate r_base(const Graph& g);

struct Suppression {
  // The base with the vertex removed and relabeled to 1..n-1.
  Graph graph;
  // The added edge, in the labels of the input graph.
  Edge added;
  std::vector<Vertex> old_to_new;
};

// Deletes degree-3 vertex v of an R-base and adds a missing edge between two
// of its neighbours so the result is again an R-base. Rejects non-bases,
// other degrees and triangle neighbourhoods with PreconditionError; failure to
// find a valid edge raises std::logic_error.
Suppression suppress(const Graph& base, Vertex v);

// The unique R-circuit inside base + e, by deleting every edge whose removal
// keeps the graph dependent.
Graph fundamental_circuit(const Graph& base, const Edge& e);

}  // namespace planerig
