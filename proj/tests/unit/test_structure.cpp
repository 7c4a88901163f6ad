#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "planerig/errors.hpp"
#include "planerig/structure.hpp"
#include "planerig/surgery.hpp"

using namespace planerig;

namespace {

// Reachability by repeated neighbourhood expansion, avoiding `removed`.
bool naive_connected(const Graph& g, std::uint64_t removed) {
  std::uint64_t live = 0;
  for (const auto& e : g.edges()) {
    const auto a = std::uint64_t{1} << (e.u - 1), b = std::uint64_t{1} << (e.v - 1);
    if (!(removed & (a | b))) live |= a | b;
  }
  for (Vertex v = 1; v <= g.order(); ++v)
    if (!(removed >> (v - 1) & 1) && g.degree(v) > 0) live |= std::uint64_t{1} << (v - 1);
  if (!live) return true;
  std::uint64_t seen = live & -live, prev = 0;
  while (seen != prev) {
    prev = seen;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (seen >> (v - 1) & 1) seen |= g.neighbor_mask(v) & live;
  }
  return seen == live;
}

}  // namespace

TEST_CASE("components and connectivity") {
  Graph g(6, {{1, 2}, {2, 3}, {5, 6}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == 0b000111);
  CHECK(comps[1] == 0b110000);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(graphs::path(4)));
  CHECK(is_connected(Graph(3, {{1, 2}})));  // isolated vertex 3 ignored
  CHECK(is_2_connected(graphs::cycle(4)));
  CHECK_FALSE(is_2_connected(graphs::path(4)));
  CHECK_FALSE(is_2_connected(graphs::complete(2)));
  CHECK(is_forest(graphs::star(4)));
  CHECK_FALSE(is_forest(graphs::cycle(3)));
  CHECK(is_regular(graphs::petersen(), 3));
  CHECK(is_properly_subcubic(graphs::path(3)));
  CHECK_FALSE(is_properly_subcubic(graphs::complete(4)));
  CHECK_FALSE(is_properly_subcubic(graphs::complete(5)));
}

TEST_CASE("2-connectivity and separators agree with vertex deletion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = testing_oracles::random_graph(rng, n, 0.5);
    if (g.has_isolated_vertices()) continue;
    CHECK(is_connected(g) == naive_connected(g, 0));
    bool two = n >= 3 && naive_connected(g, 0);
    for (Vertex v = 1; v <= n && two; ++v) two = naive_connected(g, std::uint64_t{1} << (v - 1));
    CHECK(is_2_connected(g) == two);
    std::vector<std::pair<Vertex, Vertex>> expected;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex w = u + 1; w <= n; ++w)
        if (!naive_connected(g, (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (w - 1))))
          expected.push_back({u, w});
    auto got = two_vertex_separators(g);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("Henneberg moves") {
  const Graph k3 = graphs::complete(3);
  const Graph z = zero_extension(k3, 1, 2);
  CHECK(z.order() == 4);
  CHECK(z.size() == 5);
  CHECK(z.has_edge(1, 4));
  CHECK(z.has_edge(2, 4));
  const Graph o = one_extension(graphs::complete(4), 1, 2, 3);
  CHECK(o.order() == 5);
  CHECK(o.size() == 8);
  CHECK_FALSE(o.has_edge(1, 2));
  CHECK(o.degree(5) == 3);
  CHECK_THROWS_AS(zero_extension(k3, 1, 1), PreconditionError);
  CHECK_THROWS_AS(one_extension(graphs::path(3), 1, 3, 2), PreconditionError);
}

TEST_CASE("twins and cloning") {
  const Graph k33 = graphs::complete_bipartite(3, 3);
  const auto tw = twin_classes(k33);
  REQUIRE(tw.classes.size() == 2);
  CHECK(tw.classes[0] == std::vector<Vertex>{1, 2, 3});
  CHECK(tw.tw3 == 2);
  const Graph c = clone_vertex(graphs::cycle(4), 1);
  CHECK(c.order() == 5);
  CHECK(c.neighbors(5) == c.neighbors(1));
  CHECK_FALSE(c.has_edge(1, 5));
  CHECK(twin_classes(graphs::complete(4)).tw3 == 0);
  CHECK(is_2_degenerate(graphs::cycle(5)));
  CHECK_FALSE(is_2_degenerate(graphs::complete(4)));
}
