#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "planerig/canonical.hpp"
#include "planerig/enumerate.hpp"
#include "planerig/structure.hpp"

using namespace planerig;
using testing_oracles::brute_isomorphic;
using testing_oracles::min_code;

TEST_CASE("canonical forms are invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testing_oracles::random_graph(rng, n, 0.4);
    const Graph h = testing_oracles::random_relabel(rng, g);
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    const auto cf = canonical_form(g);
    CHECK(g.relabeled(cf.labeling) == cf.graph);
  }
  CHECK(canonical_key(Graph(5, {{1, 2}})) == canonical_key(Graph(2, {{1, 2}})));
  CHECK(canonical_graph6(Graph(5, {{1, 2}})) != canonical_graph6(Graph(2, {{1, 2}})));
}

TEST_CASE("canonical keys separate exactly the brute-force iso classes") {
  std::mt19937_64 rng(5);
  std::vector<Graph> pool;
  for (int trial = 0; trial < 120; ++trial) pool.push_back(testing_oracles::random_graph(rng, 6, 0.5));
  pool.push_back(graphs::complete_bipartite(3, 3));
  pool.push_back(graphs::triangular_prism());
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      CHECK(are_isomorphic(pool[i], pool[j]) == brute_isomorphic(pool[i], pool[j]));
}

TEST_CASE("regular graphs with large automorphism groups") {
  // The prism and K33 are both 3-regular on 6 vertices.
  CHECK_FALSE(are_isomorphic(graphs::triangular_prism(), graphs::complete_bipartite(3, 3)));
  std::mt19937_64 rng(9);
  const Graph p = graphs::petersen();
  for (int i = 0; i < 10; ++i) CHECK(are_isomorphic(p, testing_oracles::random_relabel(rng, p)));
  CHECK_FALSE(are_isomorphic(p, graphs::cycle(10)));
}

TEST_CASE("graphs_on matches brute-force class counts") {
  // Counted independently over all labeled graphs.
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    const int m = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask)
      classes.insert(min_code(testing_oracles::from_mask(n, mask)));
    const auto all = graphs_on(n);
    CHECK(all.size() == classes.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].size() <= all[i].size());
  }
  CHECK(graphs_on(7).size() == 1044);
}

TEST_CASE("connected_graphs_up_to matches brute force on few edges") {
  // Classes of connected graphs without isolated vertices, keyed by edge count.
  std::map<std::size_t, std::set<std::uint64_t>> classes;
  for (int n = 2; n <= 6; ++n) {
    const int m = n * (n - 1) / 2;
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
      const Graph g = testing_oracles::from_mask(n, mask);
      if (g.size() > 5 || g.has_isolated_vertices() || !is_connected(g)) continue;
      classes[g.size()].insert(min_code(g) * 8 + static_cast<std::uint64_t>(n));
    }
  }
  std::map<std::size_t, std::size_t> got;
  for (const auto& g : connected_graphs_up_to(5)) {
    CHECK(is_connected(g));
    CHECK_FALSE(g.has_isolated_vertices());
    ++got[g.size()];
  }
  for (std::size_t k = 1; k <= 5; ++k) CHECK(got[k] == classes[k].size());
}

TEST_CASE("for_each_labeled_graph visits every mask once") {
  std::size_t count = 0;
  std::uint32_t expected = 0;
  bool ordered = true;
  for_each_labeled_graph(4, [&](std::uint32_t mask, const Graph& g) {
    ordered = ordered && mask == expected++;
    CHECK(g == testing_oracles::from_mask(4, mask));
    ++count;
  });
  CHECK(ordered);
  CHECK(count == 64);
}
