#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planerig/graph.hpp"

namespace planerig {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

// An orientation of a simple graph. Arcs are kept sorted by underlying edge.
class Orientation {
 public:
  Orientation() = default;
  Orientation(int order, std::vector<Arc> arcs);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  Graph underlying() const;
  Orientation reversed() const;
  // perm[old] = new, as for Graph::relabeled.
  Orientation relabeled(const std::vector<Vertex>& perm) const;
  std::vector<int> out_degrees() const;  // index v - 1
  std::vector<int> in_degrees() const;
  // "1>2 3>2"
  std::string to_string() const;

  bool operator==(const Orientation&) const = default;

 private:
  int order_ = 0;
  std::vector<Arc> arcs_;
};

Orientation parse_orientation(std::string_view text, int order);

bool is_acyclic(const Orientation& d);

// Relabels an acyclic orientation so every arc points from a smaller to a
// larger label. Ties are broken by smallest original label first.
struct TopologicalLabeling {
  Orientation orientation;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};
TopologicalLabeling topological_relabel(const Orientation& d);

// Alternating closed trail: arcs e_0..e_{2m-1}; consecutive arcs (cyclically)
// share vertex shared[i] = v_i and point the same way at it, and v_i != v_{i+1}.
struct AlternatingTrail {
  std::vector<Arc> arcs;
  std::vector<Vertex> shared;
};

inline constexpr std::size_t kTrailArcCap = 16;

// Exhaustive DFS over arc sequences. Throws CapExceeded above 16 arcs.
std::optional<AlternatingTrail> alternating_trail_bruteforce(const Orientation& d);

// Bipartite auxiliary graph of a topologically labeled orientation: nodes
// a_i^+ (i = 1..n-1) and a_j^- (j = 2..n), one edge {a_i^+, a_j^-} per arc i->j.
struct AuxGraph {
  int order = 0;
  // (i, j) for each arc i -> j, in arc order.
  std::vector<std::pair<Vertex, Vertex>> edges;

  int node_count() const noexcept { return order < 2 ? 0 : 2 * (order - 1); }
  // Node ids: plus nodes 0..n-2, then minus nodes n-1..2n-3.
  int plus_node(Vertex i) const noexcept { return i - 1; }
  int minus_node(Vertex j) const noexcept { return order - 1 + (j - 2); }
  bool is_forest() const;
};

// Requires every arc to go from a smaller to a larger label.
AuxGraph build_aux_graph(const Orientation& d);

// Acyclic and the auxiliary graph is a forest.
bool is_bernstein(const Orientation& d);

inline constexpr int kOrientationVertexCap = 10;

// Backtracks over edge directions, pruning directed cycles and cycles in the
// auxiliary graph. Throws CapExceeded when v(G) > 10.
std::optional<Orientation> find_bernstein_orientation(const Graph& g);
// Calls f on every Bernstein orientation until f returns false. Returns the
// number of orientations visited.
std::size_t for_each_bernstein_orientation(const Graph& g, const std::function<bool(const Orientation&)>& f);

enum class Color { Red, Blue };

// A red/blue partition of an orientation.
struct Configuration {
  int order = 0;
  std::vector<Arc> red;
  std::vector<Arc> blue;

  Graph underlying() const;
  Orientation orientation() const;
  // "R1>2 B3>2", arcs sorted by underlying edge.
  std::string to_string() const;
  bool operator==(const Configuration&) const = default;
};

Configuration parse_configuration(std::string_view text, int order);

// The configuration (r(R), B) built from the auxiliary forest of a Bernstein
// orientation, in the labels of g. Throws PreconditionError if d is not a
// Bernstein orientation of g.
Configuration ufp_configuration(const Graph& g, const Orientation& d);

// Per vertex (index v - 1): out_R, in_R, out_B, in_B.
using DegreeFunction = std::vector<std::array<int, 4>>;
DegreeFunction degree_function(const Configuration& c);

inline constexpr std::size_t kRecoverableEdgeCap = 14;

// No other configuration of the same graph has the same degree function.
// Throws CapExceeded above 14 edges.
bool is_recoverable(const Configuration& c);
// Number of configurations sharing c's degree function, stopping at limit.
std::size_t count_same_degree_configurations(const Configuration& c, std::size_t limit);

struct UfpReport {
  bool forests = false;       // red and blue underlying graphs are forests
  bool out_degree = false;    // max out-degree of each colour is at most 1
  bool bernstein = false;     // blue with reversed red is a Bernstein orientation
  bool recoverable_checked = false;
  bool recoverable = false;

  bool passed() const noexcept {
    return forests && out_degree && bernstein && (!recoverable_checked || recoverable);
  }
};

UfpReport verify_ufp(const Configuration& c);

}  // namespace planerig
