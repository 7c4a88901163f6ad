#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "oracles.hpp"
#include "planerig/bernstein.hpp"
#include "planerig/enumerate.hpp"
#include "planerig/errors.hpp"
#include "planerig/hconn.hpp"

using namespace planerig;

namespace {

Orientation orient_by_mask(const Graph& g, std::uint32_t mask) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    arcs.push_back(mask >> i & 1U ? Arc{e.v, e.u} : Arc{e.u, e.v});
  }
  return Orientation(g.order(), std::move(arcs));
}

// Cycle detection by repeated removal of sources.
bool acyclic_oracle(const Orientation& d) {
  auto in = d.in_degrees();
  std::vector<bool> gone(in.size(), false);
  for (std::size_t round = 0; round < in.size(); ++round) {
    for (std::size_t v = 0; v < in.size(); ++v) {
      if (gone[v] || in[v] != 0) continue;
      gone[v] = true;
      for (const auto& a : d.arcs())
        if (static_cast<std::size_t>(a.tail - 1) == v) --in[static_cast<std::size_t>(a.head - 1)];
      break;
    }
  }
  return std::all_of(gone.begin(), gone.end(), [](bool b) { return b; });
}

void check_trail(const Orientation& d, const AlternatingTrail& t) {
  const std::size_t len = t.arcs.size();
  REQUIRE(len >= 4);
  CHECK(len % 2 == 0);
  std::set<Arc> distinct(t.arcs.begin(), t.arcs.end());
  CHECK(distinct.size() == len);
  for (const auto& a : t.arcs) CHECK(std::find(d.arcs().begin(), d.arcs().end(), a) != d.arcs().end());
  for (std::size_t i = 0; i < len; ++i) {
    const Arc& a = t.arcs[i];
    const Arc& b = t.arcs[(i + 1) % len];
    const Vertex v = t.shared[i];
    const bool both_tail = a.tail == v && b.tail == v;
    const bool both_head = a.head == v && b.head == v;
    CHECK((both_tail || both_head));
    CHECK(t.shared[i] != t.shared[(i + 1) % len]);
  }
}

}  // namespace

TEST_CASE("orientation text form") {
  const Orientation d = parse_orientation("3>2 1>2", 3);
  CHECK(d.to_string() == "1>2 3>2");
  CHECK(d.underlying() == Graph(3, {{1, 2}, {2, 3}}));
  CHECK(d.reversed().to_string() == "2>1 2>3");
  CHECK(d.out_degrees() == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(parse_orientation("1>2 2>1", 2), PreconditionError);
  CHECK_THROWS(parse_orientation("1-2", 2));
  const Configuration c = parse_configuration("B3>2 R1>2", 3);
  CHECK(c.to_string() == "R1>2 B3>2");
  CHECK(c.orientation() == d);
}

TEST_CASE("alternating trails on small examples") {
  const Orientation alt = parse_orientation("1>2 3>2 3>4 1>4", 4);
  const auto t = alternating_trail_bruteforce(alt);
  REQUIRE(t);
  CHECK(t->arcs.size() == 4);
  check_trail(alt, *t);
  CHECK_FALSE(alternating_trail_bruteforce(parse_orientation("1>2 2>3 3>4 1>4", 4)));
  CHECK_FALSE(alternating_trail_bruteforce(parse_orientation("1>2 1>3 3>4 3>5", 5)));
  CHECK_THROWS_AS(alternating_trail_bruteforce(orient_by_mask(graphs::complete(7), 0)), CapExceeded);
}

TEST_CASE("auxiliary graph") {
  const AuxGraph single = build_aux_graph(parse_orientation("1>2", 2));
  REQUIRE(single.edges.size() == 1);
  CHECK(single.plus_node(1) == 0);
  CHECK(single.minus_node(2) == 1);
  const AuxGraph c4 = build_aux_graph(parse_orientation("1>2 2>3 3>4 1>4", 4));
  CHECK(c4.edges.size() == 4);
  CHECK(c4.is_forest());
  CHECK_THROWS_AS(build_aux_graph(parse_orientation("2>1", 2)), PreconditionError);
  CHECK_FALSE(is_bernstein(parse_orientation("1>2 2>3 3>1", 3)));
  CHECK_FALSE(is_bernstein(parse_orientation("1>2 3>2 3>4 1>4", 4)));
  CHECK(is_bernstein(parse_orientation("1>2 2>3 3>4 1>4", 4)));
}

TEST_CASE("topological relabeling") {
  const Orientation d = parse_orientation("3>1 1>2 3>2", 3);
  const auto t = topological_relabel(d);
  for (const auto& a : t.orientation.arcs()) CHECK(a.tail < a.head);
  CHECK(t.old_to_new[3] == 1);
  CHECK(t.new_to_old[1] == 3);
  CHECK(d.relabeled(t.old_to_new) == t.orientation);
  CHECK_THROWS_AS(topological_relabel(parse_orientation("1>2 2>3 3>1", 3)), PreconditionError);
}

TEST_CASE("fast Bernstein test agrees with brute force on small graphs") {
  std::size_t checked = 0;
  for (const auto& g : connected_graphs_up_to(7)) {
    for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
      const Orientation d = orient_by_mask(g, mask);
      const bool acyclic = acyclic_oracle(d);
      CHECK(is_acyclic(d) == acyclic);
      const auto trail = alternating_trail_bruteforce(d);
      if (trail) check_trail(d, *trail);
      CHECK(is_bernstein(d) == (acyclic && !trail));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("acyclic orientations are determined by their degree sequences") {
  for (const auto& g : connected_graphs_up_to(7)) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> acyclic_seen;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> all_seen;
    for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
      const Orientation d = orient_by_mask(g, mask);
      const auto key = std::pair{d.out_degrees(), d.in_degrees()};
      ++all_seen[key];
      if (is_acyclic(d)) ++acyclic_seen[key];
    }
    for (const auto& [key, count] : acyclic_seen) CHECK(all_seen[key] == 1);
  }
}

TEST_CASE("colorings with equal degree functions force an alternating trail") {
  for (const auto& g : connected_graphs_up_to(6)) {
    const std::uint32_t edges = static_cast<std::uint32_t>(g.size());
    for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
      const Orientation d = orient_by_mask(g, mask);
      std::map<DegreeFunction, int> seen;
      for (std::uint32_t colors = 0; colors < (1U << edges); ++colors) {
        Configuration c{g.order(), {}, {}};
        for (std::size_t i = 0; i < edges; ++i) (colors >> i & 1U ? c.red : c.blue).push_back(d.arcs()[i]);
        ++seen[degree_function(c)];
      }
      const bool collision = std::any_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second > 1; });
      if (collision) CHECK(alternating_trail_bruteforce(d).has_value());
    }
  }
}

TEST_CASE("orientation search") {
  CHECK(find_bernstein_orientation(graphs::cycle(4)));
  CHECK_FALSE(find_bernstein_orientation(graphs::complete_bipartite(3, 3)));
  CHECK_FALSE(find_bernstein_orientation(graphs::complete(4)));
  const auto pet = find_bernstein_orientation(graphs::petersen());
  REQUIRE(pet);
  CHECK(pet->underlying() == graphs::petersen());
  CHECK(is_bernstein(*pet));
  CHECK(find_bernstein_orientation(Graph(0)));
  CHECK_THROWS_AS(find_bernstein_orientation(graphs::cycle(11)), CapExceeded);

  // Every visited orientation is Bernstein, and the count matches brute force.
  const Graph g = graphs::triangular_prism();
  std::size_t brute = 0;
  for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) brute += is_bernstein(orient_by_mask(g, mask));
  std::size_t found = for_each_bernstein_orientation(g, [&](const Orientation& d) {
    CHECK(is_bernstein(d));
    CHECK(d.underlying() == g);
    return true;
  });
  CHECK(found == brute);
  CHECK(for_each_bernstein_orientation(g, [](const Orientation&) { return false; }) == 1);
}

TEST_CASE("orientability matches H-independence on small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : graphs_on(n))
      CHECK(find_bernstein_orientation(g).has_value() == h_independent(g, 0).independent);
}

TEST_CASE("degree functions") {
  const Configuration c = parse_configuration("B1>2", 2);
  const auto f = degree_function(c);
  CHECK(f[0] == std::array<int, 4>{0, 0, 1, 0});
  CHECK(f[1] == std::array<int, 4>{0, 0, 0, 1});
  const Configuration mixed = parse_configuration("R1>2 R1>3 B3>2 B4>3", 4);
  const auto m = degree_function(mixed);
  std::array<int, 4> sums{};
  for (const auto& row : m)
    for (int k = 0; k < 4; ++k) sums[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)];
  CHECK(sums == std::array<int, 4>{2, 2, 2, 2});
  // Reversing the red arcs swaps the red columns.
  Configuration rev = mixed;
  for (auto& a : rev.red) std::swap(a.tail, a.head);
  const auto r = degree_function(rev);
  for (std::size_t v = 0; v < m.size(); ++v) {
    CHECK(r[v][0] == m[v][1]);
    CHECK(r[v][1] == m[v][0]);
    CHECK(r[v][2] == m[v][2]);
  }
}

TEST_CASE("recoverability") {
  for (const char* text : {"R1>2", "B1>2", "R2>1", "B2>1"}) CHECK(is_recoverable(parse_configuration(text, 2)));
  CHECK_FALSE(is_recoverable(parse_configuration("B1>2 B2>3 B3>1", 3)));
  CHECK_FALSE(is_recoverable(parse_configuration("R1>2 R2>3 R3>1 B1>4", 4)));
  CHECK(count_same_degree_configurations(parse_configuration("B1>2 B2>3 B3>1", 3), 10) == 2);
  Configuration big{15, {}, {}};
  for (Vertex v = 1; v < 15; ++v) big.blue.push_back({v, v + 1});
  big.blue.push_back({1, 15});
  CHECK_THROWS_AS(is_recoverable(big), CapExceeded);
}

TEST_CASE("configurations from Bernstein orientations") {
  const Graph edge(2, {{1, 2}});
  const Configuration single = ufp_configuration(edge, parse_orientation("1>2", 2));
  CHECK(single.red.size() + single.blue.size() == 1);
  CHECK(verify_ufp(single).passed());

  const Orientation d = parse_orientation("1>2 2>3 3>4 1>4", 4);
  const Configuration c = ufp_configuration(graphs::cycle(4), d);
  CHECK(c.underlying() == graphs::cycle(4));
  const auto report = verify_ufp(c);
  CHECK(report.forests);
  CHECK(report.out_degree);
  CHECK(report.bernstein);
  CHECK(report.recoverable_checked);
  CHECK(report.recoverable);

  CHECK_THROWS_AS(ufp_configuration(graphs::cycle(4), parse_orientation("1>2 3>2 3>4 1>4", 4)), PreconditionError);

  for (int n = 2; n <= 5; ++n)
    for (const auto& g : graphs_on(n))
      for_each_bernstein_orientation(g, [&](const Orientation& o) {
        CHECK(verify_ufp(ufp_configuration(g, o)).passed());
        return true;
      });
}

TEST_CASE("verify_ufp reports") {
  const auto tri = verify_ufp(parse_configuration("B1>2 B2>3 B3>1", 3));
  CHECK_FALSE(tri.forests);
  CHECK(tri.recoverable_checked);
  CHECK_FALSE(tri.recoverable);
  CHECK_FALSE(tri.passed());
  const auto empty = verify_ufp(Configuration{});
  CHECK(empty.passed());
}
