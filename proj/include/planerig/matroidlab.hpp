#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planerig/bernstein.hpp"
#include "planerig/graph.hpp"
#include "planerig/hconn.hpp"
#include "planerig/linear_matroid.hpp"

namespace planerig {

// A graph matroid on the edges of K_n given by an independence predicate.
// The matroids here are symmetric and consistent across n, so predicates
// accept any graph and n only bounds enumeration. Predicates are pure and
// safe to query from several threads.
struct MatroidOracle {
  int n = 0;
  std::string label;
  std::function<bool(const Graph&)> indep;
};

MatroidOracle laman_oracle(int n);
MatroidOracle hconn_oracle(int n, std::int64_t characteristic, const VerdictOptions& opts = {});
MatroidOracle wedge_oracle(int n, int dimension, std::int64_t characteristic, const VerdictOptions& opts = {});

// Greedy in edge order.
int rank(const MatroidOracle& o, const Graph& s);
bool is_circuit(const MatroidOracle& o, const Graph& g);

inline constexpr int kCircuitEnumerationCap = 7;

// Circuits with at most max_edges edges on at most n vertices, up to
// isomorphism, ordered by edge count and then canonical graph6.
std::vector<Graph> enumerate_circuits(const MatroidOracle& o, int n, int max_edges);

// W_n(r, p): rows v_i ^ v_j for the given pairs, columns the pairs k < l of
// 1..r, entry x_{i,k} x_{j,l} - x_{i,l} x_{j,k}. Variable x_{i,k} has index
// (i - 1) r + (k - 1).
//
// With normalize set, v_1..v_min(n,r) are the unit vectors e_1, e_2, ... and
// only the remaining vectors carry variables (vertex i > r' uses indices
// (i - r' - 1) r + k - 1). A change of basis maps generic vectors to this
// form and keeps the rest generic, so the rank is unchanged in every
// characteristic.
struct WedgeMatrix {
  std::vector<Edge> row_edges;
  int order = 0;
  int dimension = 0;
  PolyMatrix matrix;
};

WedgeMatrix build_wedge_matrix(const std::vector<Edge>& rows, int order, int dimension, std::int64_t characteristic,
                               bool normalize = false);
// Rank and verdicts use the normalized matrix of the compacted graph.
int wedge_rank_symbolic(const Graph& g, int dimension, std::int64_t characteristic,
                        std::size_t cap = kDefaultSymbolicCap);
GraphVerdict wedge_independent(const Graph& g, int dimension, std::int64_t characteristic,
                               const VerdictOptions& opts = {});

struct DualityReport {
  int n = 0;
  std::int64_t characteristic = 0;
  std::size_t subsets = 0;
  std::size_t h_bases = 0;
  std::size_t w_bases = 0;
  // Bases B of one side whose complement is not a base of the other.
  std::vector<Graph> mismatches;
  bool passed() const noexcept { return mismatches.empty(); }
};

inline constexpr int kDualityCap = 6;

// Over every (2n-3)-subset B of K_n: B is an H_{n,p} base iff its complement
// is a W_n(n-2, p) base.
DualityReport check_duality(int n, std::int64_t characteristic, const VerdictOptions& opts = {});

// Connected 3-regular graphs on n vertices up to isomorphism, n even in 4..12.
std::vector<Graph> generate_connected_cubic(int n);
// Independent enumerator: vertex-by-vertex growth of subcubic graphs with
// per-level isomorph rejection by a direct isomorphism test.
std::vector<Graph> enumerate_cubic_orderly(int n);
// Isomorphism by direct backtracking over invariant-compatible vertex maps.
bool isomorphic_backtrack(const Graph& a, const Graph& b);

enum class CubicClass { K4CircuitEverywhere, K33RIndependentElseCircuit, OmniforestCandidate };
std::string to_string(CubicClass c);

struct CubicClassification {
  CubicClass kind = CubicClass::OmniforestCandidate;
  bool r_independent = false;
  std::optional<Orientation> orientation;
  // For candidates: R-independent and Bernstein-orientable.
  bool assertions_hold = false;
};

CubicClassification classify_cubic(const Graph& g);

struct PropertyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const noexcept { return failures.empty(); }
};

// For a circuit D: (D (+) v) - e is dependent for each degree-3 v and edge e
// of D missing v, and (D (+) v) - w is dependent for each degree-3 w not
// adjacent to v.
PropertyReport tripling_check(const MatroidOracle& o, const Graph& d);

// For a circuit G and each 2-vertex separator {u, w}: e = uw is not an edge,
// and X + e and Y + e are circuits, where X is induced on one component of
// G - u - w plus u, w and Y is the rest of G.
PropertyReport two_cut_check(const MatroidOracle& o, const Graph& g);

}  // namespace planerig
