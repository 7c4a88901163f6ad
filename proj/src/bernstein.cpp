#include "planerig/bernstein.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>

#include "planerig/errors.hpp"
#include "planerig/structure.hpp"

namespace planerig {

namespace {

Edge edge_of(const Arc& a) { return make_edge(a.tail, a.head); }

void sort_by_edge(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return edge_of(x) < edge_of(y); });
}

std::string arc_text(const Arc& a) { return std::to_string(a.tail) + ">" + std::to_string(a.head); }

Arc parse_arc(std::string_view tok, std::size_t offset) {
  const auto gt = tok.find('>');
  if (gt == std::string_view::npos) throw ParseError("expected i>j", offset);
  Arc a;
  auto r1 = std::from_chars(tok.data(), tok.data() + gt, a.tail);
  auto r2 = std::from_chars(tok.data() + gt + 1, tok.data() + tok.size(), a.head);
  if (r1.ec != std::errc() || r1.ptr != tok.data() + gt || r2.ec != std::errc() ||
      r2.ptr != tok.data() + tok.size())
    throw ParseError("malformed arc '" + std::string(tok) + "'", offset);
  return a;
}

// Splits on whitespace, reporting each token with its offset.
template <class F>
void for_each_token(std::string_view text, F&& f) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) f(text.substr(i, j - i), i);
    i = j;
  }
}

// Union-find with rollback; no path compression.
class UndoUnionFind {
 public:
  explicit UndoUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  // False (and no change) if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_, size_, history_;
};

}  // namespace

Orientation::Orientation(int order, std::vector<Arc> arcs) : order_(order), arcs_(std::move(arcs)) {
  if (order < 0 || order > kMaxVertices) throw CapExceeded("orientations support at most 64 vertices");
  for (const auto& a : arcs_) {
    if (a.tail < 1 || a.tail > order || a.head < 1 || a.head > order)
      throw PreconditionError("arc " + arc_text(a) + " outside 1.." + std::to_string(order));
    if (a.tail == a.head) throw PreconditionError("loop arc " + arc_text(a));
  }
  sort_by_edge(arcs_);
  for (std::size_t i = 1; i < arcs_.size(); ++i)
    if (edge_of(arcs_[i]) == edge_of(arcs_[i - 1]))
      throw PreconditionError("edge " + planerig::to_string(edge_of(arcs_[i])) + " oriented twice");
}

Graph Orientation::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const auto& a : arcs_) edges.push_back(edge_of(a));
  return Graph(order_, std::move(edges));
}

Orientation Orientation::reversed() const {
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const auto& a : arcs_) arcs.push_back({a.head, a.tail});
  return Orientation(order_, std::move(arcs));
}

Orientation Orientation::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != static_cast<std::size_t>(order_) + 1) throw PreconditionError("permutation size mismatch");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const auto& a : arcs_)
    arcs.push_back({perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]});
  return Orientation(order_, std::move(arcs));
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(order_), 0);
  for (const auto& a : arcs_) ++d[static_cast<std::size_t>(a.tail - 1)];
  return d;
}

std::vector<int> Orientation::in_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(order_), 0);
  for (const auto& a : arcs_) ++d[static_cast<std::size_t>(a.head - 1)];
  return d;
}

std::string Orientation::to_string() const {
  std::string out;
  for (const auto& a : arcs_) {
    if (!out.empty()) out += ' ';
    out += arc_text(a);
  }
  return out;
}

Orientation parse_orientation(std::string_view text, int order) {
  std::vector<Arc> arcs;
  for_each_token(text, [&](std::string_view tok, std::size_t off) { arcs.push_back(parse_arc(tok, off)); });
  return Orientation(order, std::move(arcs));
}

TopologicalLabeling topological_relabel(const Orientation& d) {
  const int n = d.order();
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : d.arcs()) {
    out[static_cast<std::size_t>(a.tail)].push_back(a.head);
    ++indeg[static_cast<std::size_t>(a.head)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  TopologicalLabeling t;
  t.old_to_new.assign(static_cast<std::size_t>(n) + 1, 0);
  t.new_to_old.assign(static_cast<std::size_t>(n) + 1, 0);
  Vertex next = 1;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    t.old_to_new[static_cast<std::size_t>(v)] = next;
    t.new_to_old[static_cast<std::size_t>(next)] = v;
    ++next;
    for (Vertex w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (next != n + 1) throw PreconditionError("orientation has a directed cycle");
  t.orientation = d.relabeled(t.old_to_new);
  return t;
}

bool is_acyclic(const Orientation& d) {
  try {
    topological_relabel(d);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::optional<AlternatingTrail> alternating_trail_bruteforce(const Orientation& d) {
  const auto& arcs = d.arcs();
  if (arcs.size() > kTrailArcCap)
    throw CapExceeded("trail search is capped at " + std::to_string(kTrailArcCap) + " arcs");
  const std::size_t m = arcs.size();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> seq;
  std::vector<Vertex> shared;

  // e_0 is the smallest arc index on the trail and v_0 is its head, so the
  // walk leaves v_0 backwards along e_1; after that, directions alternate.
  // The trail closes once the walk stands at the tail of e_0 having just
  // arrived there as a tail, which forces an even number of arcs.
  std::size_t first = 0;
  std::function<bool(Vertex, bool)> extend = [&](Vertex at, bool at_head) -> bool {
    const Arc& e0 = arcs[first];
    if (seq.size() >= 2 && !at_head && at == e0.tail) {
      shared.push_back(at);
      return true;
    }
    for (std::size_t i = first + 1; i < m; ++i) {
      if (used[i]) continue;
      const Arc& a = arcs[i];
      if ((at_head ? a.head : a.tail) != at) continue;
      used[i] = true;
      seq.push_back(i);
      shared.push_back(at);
      if (extend(at_head ? a.tail : a.head, !at_head)) return true;
      shared.pop_back();
      seq.pop_back();
      used[i] = false;
    }
    return false;
  };
  for (first = 0; first < m; ++first) {
    seq = {first};
    shared.clear();
    used.assign(m, false);
    used[first] = true;
    if (extend(arcs[first].head, true)) {
      AlternatingTrail t;
      for (auto i : seq) t.arcs.push_back(arcs[i]);
      // shared[k] joins seq[k] and seq[k+1]; the last one closes onto e_0.
      t.shared = shared;
      return t;
    }
  }
  return std::nullopt;
}

bool AuxGraph::is_forest() const {
  UndoUnionFind uf(std::max(1, node_count()));
  for (const auto& [i, j] : edges)
    if (!uf.unite(plus_node(i), minus_node(j))) return false;
  return true;
}

AuxGraph build_aux_graph(const Orientation& d) {
  AuxGraph f;
  f.order = d.order();
  for (const auto& a : d.arcs()) {
    if (a.tail >= a.head)
      throw PreconditionError("arc " + arc_text(a) + " is not oriented from smaller to larger label");
    f.edges.emplace_back(a.tail, a.head);
  }
  return f;
}

bool is_bernstein(const Orientation& d) {
  if (!is_acyclic(d)) return false;
  return build_aux_graph(topological_relabel(d).orientation).is_forest();
}

namespace {

// Depth-first assignment of edge directions. Adding u->v is rejected when it
// closes a directed cycle or joins u^+ and v^- already connected in the
// auxiliary graph (which would mean an alternating closed trail).
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, const std::function<bool(const Orientation&)>& f)
      : n_(g.order()), f_(f), uf_(2 * std::max(1, g.order())) {
    if (g.incident_vertex_count() > kOrientationVertexCap)
      throw CapExceeded("orientation search is capped at " + std::to_string(kOrientationVertexCap) +
                        " vertices");
    edges_ = g.edges();
    // Larger endpoint first so cycles close as early as possible.
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.v, a.u) < std::pair(b.v, b.u); });
    reach_.assign(static_cast<std::size_t>(n_) + 1, 0);
  }

  std::size_t run() {
    go(0);
    return visited_;
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

  bool go(std::size_t k) {
    if (k == edges_.size()) {
      ++visited_;
      return f_(Orientation(n_, chosen_));
    }
    const auto [u, v] = edges_[k];
    for (const auto& a : {Arc{u, v}, Arc{v, u}}) {
      if (reach_[static_cast<std::size_t>(a.head)] & bit(a.tail)) continue;
      if (!uf_.unite(a.tail - 1, n_ + a.head - 1)) continue;
      const auto saved = reach_;
      const std::uint64_t gained = reach_[static_cast<std::size_t>(a.head)] | bit(a.head);
      for (Vertex x = 1; x <= n_; ++x)
        if (x == a.tail || (reach_[static_cast<std::size_t>(x)] & bit(a.tail))) reach_[static_cast<std::size_t>(x)] |= gained;
      chosen_.push_back(a);
      const bool cont = go(k + 1);
      chosen_.pop_back();
      reach_ = saved;
      uf_.undo();
      if (!cont) return false;
    }
    return true;
  }

  int n_;
  const std::function<bool(const Orientation&)>& f_;
  UndoUnionFind uf_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> reach_;  // reach_[x]: vertices reachable from x by a nonempty path
  std::vector<Arc> chosen_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_bernstein_orientation(const Graph& g, const std::function<bool(const Orientation&)>& f) {
  return OrientationSearch(g, f).run();
}

std::optional<Orientation> find_bernstein_orientation(const Graph& g) {
  std::optional<Orientation> found;
  for_each_bernstein_orientation(g, [&](const Orientation& d) {
    found = d;
    return false;
  });
  return found;
}

Graph Configuration::underlying() const { return orientation().underlying(); }

Orientation Configuration::orientation() const {
  std::vector<Arc> arcs = red;
  arcs.insert(arcs.end(), blue.begin(), blue.end());
  return Orientation(order, std::move(arcs));
}

std::string Configuration::to_string() const {
  std::vector<std::pair<Arc, char>> all;
  for (const auto& a : red) all.emplace_back(a, 'R');
  for (const auto& a : blue) all.emplace_back(a, 'B');
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return edge_of(x.first) < edge_of(y.first); });
  std::string out;
  for (const auto& [a, c] : all) {
    if (!out.empty()) out += ' ';
    out += c;
    out += arc_text(a);
  }
  return out;
}

Configuration parse_configuration(std::string_view text, int order) {
  Configuration c;
  c.order = order;
  for_each_token(text, [&](std::string_view tok, std::size_t off) {
    if (tok[0] != 'R' && tok[0] != 'B') throw ParseError("arc must start with R or B", off);
    (tok[0] == 'R' ? c.red : c.blue).push_back(parse_arc(tok.substr(1), off + 1));
  });
  sort_by_edge(c.red);
  sort_by_edge(c.blue);
  c.orientation();  // validates
  return c;
}

Configuration ufp_configuration(const Graph& g, const Orientation& d) {
  if (d.underlying() != g) throw PreconditionError("orientation does not orient the given graph");
  if (!is_bernstein(d)) throw PreconditionError("orientation is not Bernstein");
  const auto topo = topological_relabel(d);
  const AuxGraph f = build_aux_graph(topo.orientation);
  const int nodes = f.node_count();

  // Root each tree at its smallest node and send every edge child -> parent,
  // so each node has out-degree at most one.
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(std::max(0, nodes)));
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const int p = f.plus_node(f.edges[e].first), q = f.minus_node(f.edges[e].second);
    adj[static_cast<std::size_t>(p)].emplace_back(q, e);
    adj[static_cast<std::size_t>(q)].emplace_back(p, e);
  }
  std::vector<int> child_of(f.edges.size(), -1);
  std::vector<bool> seen(adj.size(), false);
  for (int root = 0; root < nodes; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : adj[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        child_of[e] = y;
        stack.push_back(y);
      }
    }
  }

  Configuration c;
  c.order = g.order();
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    const auto [i, j] = f.edges[e];
    const Arc original{topo.new_to_old[static_cast<std::size_t>(i)], topo.new_to_old[static_cast<std::size_t>(j)]};
    if (child_of[e] == f.plus_node(i)) c.blue.push_back(original);
    else c.red.push_back({original.head, original.tail});  // red is emitted reversed
  }
  sort_by_edge(c.red);
  sort_by_edge(c.blue);
  return c;
}

DegreeFunction degree_function(const Configuration& c) {
  DegreeFunction f(static_cast<std::size_t>(c.order), {0, 0, 0, 0});
  for (const auto& a : c.red) {
    ++f[static_cast<std::size_t>(a.tail - 1)][0];
    ++f[static_cast<std::size_t>(a.head - 1)][1];
  }
  for (const auto& a : c.blue) {
    ++f[static_cast<std::size_t>(a.tail - 1)][2];
    ++f[static_cast<std::size_t>(a.head - 1)][3];
  }
  return f;
}

std::size_t count_same_degree_configurations(const Configuration& c, std::size_t limit) {
  const Graph g = c.underlying();
  if (g.size() > kRecoverableEdgeCap)
    throw CapExceeded("recoverability search is capped at " + std::to_string(kRecoverableEdgeCap) + " edges");
  // Remaining budget per vertex; an option is pruned as soon as it would
  // drive a coordinate negative. Every coordinate reaches zero exactly when
  // the last incident edge is placed, since budgets sum to the degree.
  DegreeFunction budget = degree_function(c);
  std::size_t found = 0;
  const auto& edges = g.edges();
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (found >= limit) return;
    if (k == edges.size()) {
      ++found;
      return;
    }
    const auto [u, v] = edges[k];
    for (int color = 0; color < 2; ++color) {
      for (const auto& [t, h] : {std::pair{u, v}, std::pair{v, u}}) {
        auto& bt = budget[static_cast<std::size_t>(t - 1)][2 * color];
        auto& bh = budget[static_cast<std::size_t>(h - 1)][2 * color + 1];
        if (bt == 0 || bh == 0) continue;
        --bt;
        --bh;
        go(k + 1);
        ++bt;
        ++bh;
      }
    }
  };
  go(0);
  return found;
}

bool is_recoverable(const Configuration& c) { return count_same_degree_configurations(c, 2) == 1; }

UfpReport verify_ufp(const Configuration& c) {
  UfpReport r;
  const Orientation red(c.order, c.red), blue(c.order, c.blue);
  r.forests = is_forest(red.underlying()) && is_forest(blue.underlying());
  auto max_of = [](const std::vector<int>& d) { return d.empty() ? 0 : *std::max_element(d.begin(), d.end()); };
  r.out_degree = max_of(red.out_degrees()) <= 1 && max_of(blue.out_degrees()) <= 1;
  std::vector<Arc> merged = blue.arcs();
  for (const auto& a : red.arcs()) merged.push_back({a.head, a.tail});
  r.bernstein = is_bernstein(Orientation(c.order, std::move(merged)));
  if (c.red.size() + c.blue.size() <= kRecoverableEdgeCap) {
    r.recoverable_checked = true;
    r.recoverable = is_recoverable(c);
  }
  return r;
}

}  // namespace planerig
