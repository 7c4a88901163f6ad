#include "planerig/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "planerig/graph6.hpp"

namespace planerig {
namespace {

using Code = std::vector<std::uint64_t>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbor_mask(v + 1);
  }

  std::vector<int> run() {
    std::vector<int> cell(static_cast<std::size_t>(n_), 0);
    refine(cell);
    std::vector<int> path;
    search(cell, path);
    return best_order_;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. Cell
  // indices stay ordered by an isomorphism-invariant signature.
  void refine(std::vector<int>& cell) const {
    int cells = n_ == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(static_cast<std::size_t>(cells) + 1, 0);
        s[0] = cell[v];
        for (auto m = adj_[v]; m; m &= m - 1) ++s[1 + cell[std::countr_zero(m)]];
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < n_; ++v)
        cell[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      int next = static_cast<int>(sorted.size());
      if (next == cells) return;
      cells = next;
    }
  }

  std::vector<int> individualize(const std::vector<int>& cell, int v) const {
    auto out = cell;
    const int k = cell[v];
    for (int w = 0; w < n_; ++w)
      if (cell[w] > k || (cell[w] == k && w != v)) ++out[w];
    refine(out);
    return out;
  }

  Code code_of(const std::vector<int>& order) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    Code code(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (auto m = adj_[order[i]]; m; m &= m - 1)
        code[i] |= std::uint64_t{1} << (n_ - 1 - pos[std::countr_zero(m)]);
    return code;
  }

  bool same_orbit(const std::vector<int>& path, int a, int b) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    return find(a) == find(b);
  }

  void search(const std::vector<int>& cell, std::vector<int>& path) {
    std::vector<int> count(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) ++count[cell[v]];
    int target = -1;
    for (int k = 0; k < n_; ++k)
      if (count[k] > 1) {
        target = k;
        break;
      }
    if (target < 0) {
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) order[cell[v]] = v;
      leaf(order);
      return;
    }
    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      bool pruned = std::any_of(explored.begin(), explored.end(),
                                [&](int w) { return same_orbit(path, v, w); });
      if (pruned) continue;
      path.push_back(v);
      search(individualize(cell, v), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const std::vector<int>& order) {
    Code code = code_of(order);
    if (best_order_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = order;
    } else if (code == best_code_) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
      autos_.push_back(std::move(gamma));
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  Code best_code_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  auto order = CanonSearch(g).run();
  std::vector<Vertex> labeling(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int i = 0; i < g.order(); ++i) labeling[order[i] + 1] = i + 1;
  return {g.relabeled(labeling), std::move(labeling)};
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g).graph); }

std::string canonical_key(const Graph& g) { return canonical_graph6(g.compacted().graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degrees().size() != b.degrees().size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace planerig
