#include "planerig/matroidlab.hpp"

#include <algorithm>
#include <bit>

#include "planerig/canonical.hpp"
#include "planerig/enumerate.hpp"
#include "planerig/errors.hpp"
#include "planerig/laman.hpp"
#include "planerig/structure.hpp"
#include "planerig/surgery.hpp"

namespace planerig {

namespace {

std::string std_label(const char* name, std::int64_t c) {
  return std::string(name) + " char " + std::to_string(c);
}

}  // namespace

MatroidOracle laman_oracle(int n) {
  return {n, "R", [](const Graph& g) { return r_independent(g); }};
}

MatroidOracle hconn_oracle(int n, std::int64_t characteristic, const VerdictOptions& opts) {
  FieldConfig::for_characteristic(characteristic);  // validates early
  return {n, std_label("H", characteristic),
          [characteristic, opts](const Graph& g) { return h_independent(g, characteristic, opts).independent; }};
}

MatroidOracle wedge_oracle(int n, int dimension, std::int64_t characteristic, const VerdictOptions& opts) {
  if (dimension < 2) throw PreconditionError("wedge dimension must be at least 2");
  FieldConfig::for_characteristic(characteristic);
  return {n, "W(" + std::to_string(dimension) + ") char " + std::to_string(characteristic),
          [dimension, characteristic, opts](const Graph& g) {
            return wedge_independent(g, dimension, characteristic, opts).independent;
          }};
}

int rank(const MatroidOracle& o, const Graph& s) {
  std::vector<Edge> kept;
  for (const auto& e : s.edges()) {
    kept.push_back(e);
    if (!o.indep(Graph(s.order(), kept))) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

bool is_circuit(const MatroidOracle& o, const Graph& g) {
  if (g.empty() || o.indep(g)) return false;
  for (const auto& e : g.edges())
    if (!o.indep(g.without_edge(e))) return false;
  return true;
}

std::vector<Graph> enumerate_circuits(const MatroidOracle& o, int n, int max_edges) {
  if (n > kCircuitEnumerationCap)
    throw CapExceeded("circuit enumeration is capped at " + std::to_string(kCircuitEnumerationCap) + " vertices");
  std::vector<std::pair<std::string, Graph>> found;
  for (int m = 2; m <= n; ++m) {
    for (const auto& g : graphs_on(m)) {
      if (g.has_isolated_vertices() || static_cast<int>(g.size()) > max_edges) continue;
      if (is_circuit(o, g)) found.emplace_back(canonical_graph6(g), g);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second.size(), a.first) < std::pair(b.second.size(), b.first);
  });
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

WedgeMatrix build_wedge_matrix(const std::vector<Edge>& rows, int order, int dimension, std::int64_t characteristic,
                               bool normalize) {
  if (dimension < 2) throw PreconditionError("wedge dimension must be at least 2");
  if (order < 1) throw PreconditionError("wedge matrix needs at least one vertex");
  for (const auto& e : rows)
    if (e.u < 1 || e.v > order || e.u >= e.v)
      throw PreconditionError("edge " + to_string(e) + " outside 1.." + std::to_string(order));
  const int fixed = normalize ? std::min(order, dimension) : 0;
  const int vars = std::max(1, (order - fixed) * dimension);
  if (vars > 64) throw CapExceeded("wedge matrix limited to 64 variables");
  WedgeMatrix w{rows, order, dimension, PolyMatrix{PolyRing(vars, characteristic), 0, {}}};
  const auto& ring = w.matrix.ring;
  // Coordinate k of v_i: the unit value delta_{ik} for fixed vertices, a
  // variable otherwise.
  auto coord = [&](Vertex i, int k) {
    if (i <= fixed) return ring.constant(i == k ? 1 : 0);
    return ring.variable((i - fixed - 1) * dimension + (k - 1));
  };
  std::vector<std::pair<int, int>> cols;
  for (int k = 1; k <= dimension; ++k)
    for (int l = k + 1; l <= dimension; ++l) cols.emplace_back(k, l);
  w.matrix.cols = cols.size();
  for (const auto& [i, j] : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (const auto& [k, l] : cols)
      row.push_back(ring.sub(ring.mul(coord(i, k), coord(j, l)), ring.mul(coord(i, l), coord(j, k))));
    w.matrix.rows.push_back(std::move(row));
  }
  return w;
}

namespace {

PolyMatrix compact_wedge_rows(const Graph& g, const std::vector<std::size_t>& idx, int dimension,
                              std::int64_t characteristic) {
  std::vector<Edge> edges;
  for (auto i : idx) edges.push_back(g.edges()[i]);
  auto compact = Graph(g.order(), std::move(edges)).compacted().graph;
  return build_wedge_matrix(compact.edges(), std::max(1, compact.order()), dimension, characteristic, true).matrix;
}

}  // namespace

int wedge_rank_symbolic(const Graph& g, int dimension, std::int64_t characteristic, std::size_t cap) {
  if (g.size() > cap)
    throw CapExceeded("symbolic rank is capped at " + std::to_string(cap) + " rows; graph has " +
                      std::to_string(g.size()));
  if (g.empty()) return 0;
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return symbolic_rank(compact_wedge_rows(g, all, dimension, characteristic));
}

GraphVerdict wedge_independent(const Graph& g, int dimension, std::int64_t characteristic, const VerdictOptions& opts) {
  if (dimension < 2) throw PreconditionError("wedge dimension must be at least 2");
  auto v = row_independence(
      g.size(),
      [&](const std::vector<std::size_t>& idx) { return compact_wedge_rows(g, idx, dimension, characteristic); },
      characteristic, opts);
  GraphVerdict out{v.independent, v.method, v.rank, std::nullopt};
  if (!v.independent) out.witness = g.edge_subgraph(v.witness);
  return out;
}

DualityReport check_duality(int n, std::int64_t characteristic, const VerdictOptions& opts) {
  if (n < 4 || n > kDualityCap) throw CapExceeded("duality check supports 4 <= n <= 6");
  DualityReport r{n, characteristic, 0, 0, 0, {}};
  const Graph kn = graphs::complete(n);
  const auto& all = kn.edges();
  const int m = static_cast<int>(all.size());
  const int base_size = 2 * n - 3;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) != base_size) continue;
    std::vector<Edge> b, rest;
    for (int i = 0; i < m; ++i) (mask >> i & 1U ? b : rest).push_back(all[static_cast<std::size_t>(i)]);
    const Graph bg(n, b), cg(n, rest);
    ++r.subsets;
    const bool hb = h_independent(bg, characteristic, opts).independent;
    const bool wb = wedge_independent(cg, n - 2, characteristic, opts).independent;
    r.h_bases += hb;
    r.w_bases += wb;
    if (hb != wb) r.mismatches.push_back(bg);
  }
  return r;
}

std::string to_string(CubicClass c) {
  switch (c) {
    case CubicClass::K4CircuitEverywhere: return "K4-circuit-everywhere";
    case CubicClass::K33RIndependentElseCircuit: return "K33-R-independent-else-circuit";
    case CubicClass::OmniforestCandidate: return "omniforest-candidate";
  }
  return "unknown";
}

CubicClassification classify_cubic(const Graph& g) {
  if (!is_regular(g, 3) || !is_connected(g)) throw PreconditionError("graph is not connected and 3-regular");
  CubicClassification c;
  c.r_independent = r_independent(g);
  if (g.order() == 4) {
    c.kind = CubicClass::K4CircuitEverywhere;
  } else if (g.order() == 6 && are_isomorphic(g, graphs::complete_bipartite(3, 3))) {
    c.kind = CubicClass::K33RIndependentElseCircuit;
  } else {
    c.kind = CubicClass::OmniforestCandidate;
    c.orientation = find_bernstein_orientation(g);
    c.assertions_hold = c.r_independent && c.orientation.has_value();
  }
  return c;
}

PropertyReport tripling_check(const MatroidOracle& o, const Graph& d) {
  if (!is_circuit(o, d)) throw PreconditionError("graph is not a circuit of " + o.label);
  std::vector<Vertex> cubic;
  for (Vertex v = 1; v <= d.order(); ++v)
    if (d.degree(v) == 3) cubic.push_back(v);
  if (cubic.empty()) throw PreconditionError("circuit has no degree-3 vertex");
  PropertyReport r;
  bool any_pair = false;
  for (Vertex v : cubic) {
    const Graph plus = clone_vertex(d, v);
    for (const auto& e : d.edges()) {
      if (e.u == v || e.v == v) continue;
      ++r.checks;
      if (o.indep(plus.without_edge(e)))
        r.failures.push_back("clone " + std::to_string(v) + " minus edge " + to_string(e) + " is independent");
    }
    for (Vertex w : cubic) {
      if (w == v || d.has_edge(v, w)) continue;
      any_pair = true;
      ++r.checks;
      if (o.indep(plus.without_vertex(w).graph))
        r.failures.push_back("clone " + std::to_string(v) + " minus vertex " + std::to_string(w) + " is independent");
    }
  }
  if (!any_pair) r.notes.push_back("part 2 vacuous: degree-3 vertices pairwise adjacent");
  return r;
}

PropertyReport two_cut_check(const MatroidOracle& o, const Graph& g) {
  if (!is_circuit(o, g)) throw PreconditionError("graph is not a circuit of " + o.label);
  PropertyReport r;
  const auto seps = two_vertex_separators(g);
  if (seps.empty()) {
    r.notes.push_back("no 2-separator");
    return r;
  }
  for (const auto& [u, w] : seps) {
    const std::uint64_t cut = (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (w - 1));
    for (const std::uint64_t comp : components_avoiding(g, cut)) {
      const std::uint64_t side = comp | cut;
      std::vector<Edge> x, y;
      for (const auto& e : g.edges()) {
        const bool inside = (side >> (e.u - 1) & 1U) && (side >> (e.v - 1) & 1U);
        (inside ? x : y).push_back(e);
      }
      const std::string where = "separator {" + std::to_string(u) + "," + std::to_string(w) + "}";
      if (x.size() < 2 || y.size() < 2) {
        r.notes.push_back(where + ": side with fewer than 2 edges skipped");
        continue;
      }
      const Edge e = make_edge(u, w);
      ++r.checks;
      if (g.has_edge(e)) {
        r.failures.push_back(where + ": separator pair is an edge");
        continue;
      }
      if (!is_circuit(o, Graph(g.order(), x).with_edge(e))) r.failures.push_back(where + ": X + e is not a circuit");
      if (!is_circuit(o, Graph(g.order(), y).with_edge(e))) r.failures.push_back(where + ": Y + e is not a circuit");
    }
  }
  return r;
}

}  // namespace planerig
