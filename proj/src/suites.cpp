#include "planerig/suites.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "planerig/bernstein.hpp"
#include "planerig/canonical.hpp"
#include "planerig/enumerate.hpp"
#include "planerig/errors.hpp"
#include "planerig/graph6.hpp"
#include "planerig/hconn.hpp"
#include "planerig/laman.hpp"
#include "planerig/matroidlab.hpp"
#include "planerig/structure.hpp"

namespace planerig {

namespace {

class Collector {
 public:
  void fail(const Graph& g, std::string witness, std::string note) {
    std::lock_guard lock(mu_);
    failures_.push_back({emit_graph6(g), std::move(witness), std::move(note)});
  }
  void count(std::size_t k = 1) { instances_ += k; }
  void note(std::string line) {
    std::lock_guard lock(mu_);
    notes_.push_back(std::move(line));
  }
  void finish(VerificationReport& r) {
    std::sort(failures_.begin(), failures_.end());
    r.failures = std::move(failures_);
    r.notes = std::move(notes_);
    r.instances = instances_;
  }

 private:
  std::mutex mu_;
  std::vector<Failure> failures_;
  std::vector<std::string> notes_;
  std::atomic<std::size_t> instances_{0};
};

template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Labeled graph on 1..n; bit i selects the i-th edge of K_n in lex order.
Graph from_mask(int n, std::uint32_t mask) {
  const Graph kn = graphs::complete(n);
  const auto& all = kn.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask >> i & 1U) edges.push_back(all[i]);
  return Graph(n, std::move(edges));
}

std::uint32_t labeled_count(int n) { return 1U << (n * (n - 1) / 2); }

VerdictOptions verdict_options(const SuiteOptions& o, std::uint64_t salt) {
  return {o.trials, mix_seed(o.seed, salt), o.symbolic_cap};
}

const std::int64_t kPrimes[] = {2, 3, 5};

// Every graph on at most n vertices up to isomorphism, without isolated vertices.
std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int m = 2; m <= n; ++m)
    for (const auto& g : graphs_on(m))
      if (!g.has_isolated_vertices()) out.push_back(g);
  return out;
}

void bernstein_equiv(const SuiteOptions& o, Collector& c) {
  const int n = o.nmax;
  parallel_for(labeled_count(n), o.jobs, [&](std::size_t mask) {
    const Graph g = from_mask(n, static_cast<std::uint32_t>(mask));
    const auto v = h_independent(g, 0, verdict_options(o, mask));
    const auto d = find_bernstein_orientation(g);
    c.count();
    if (v.independent != d.has_value())
      c.fail(g, d ? d->to_string() : emit_graph6(*v.witness),
             v.independent ? "H-independent but no Bernstein orientation"
                           : "Bernstein orientation but H-dependent (" + to_string(v.method) + ")");
  });
}

void char_p(const SuiteOptions& o, Collector& c) {
  const int n = o.nmax;
  parallel_for(labeled_count(n), o.jobs, [&](std::size_t mask) {
    const Graph g = from_mask(n, static_cast<std::uint32_t>(mask));
    const auto base = h_independent(g, 0, verdict_options(o, mask));
    c.count();
    auto check_method = [&](const GraphVerdict& v, std::int64_t p) {
      if (!v.independent && v.method != Method::Symbolic)
        c.fail(g, emit_graph6(*v.witness), "dependent verdict in char " + std::to_string(p) + " is " + to_string(v.method));
    };
    check_method(base, 0);
    for (auto p : kPrimes) {
      const auto v = h_independent(g, p, verdict_options(o, mask));
      if (v.independent != base.independent)
        c.fail(g, "", "char " + std::to_string(p) + " disagrees with char 0");
      check_method(v, p);
    }
  });
}

void cubic(const SuiteOptions& o, Collector& c) {
  const Graph k4 = graphs::complete(4), k33 = graphs::complete_bipartite(3, 3);
  for (int n = 4; n <= o.nmax; n += 2) {
    const auto gen = generate_connected_cubic(n);
    const auto orderly = enumerate_cubic_orderly(n);
    c.note("n=" + std::to_string(n) + ": " + std::to_string(gen.size()) + " generated, " +
           std::to_string(orderly.size()) + " by second enumerator");
    if (gen.size() != orderly.size())
      c.fail(Graph(n), "", "count mismatch between enumerators at n=" + std::to_string(n));
    for (const auto& g : gen) {
      const auto matches = std::count_if(orderly.begin(), orderly.end(),
                                         [&](const Graph& h) { return isomorphic_backtrack(g, h); });
      if (matches != 1) c.fail(g, "", "matched " + std::to_string(matches) + " graphs of the second enumerator");
    }
    parallel_for(gen.size(), o.jobs, [&](std::size_t i) {
      const Graph& g = gen[i];
      const auto cls = classify_cubic(g);
      c.count();
      const auto h0 = hconn_oracle(n, 0, verdict_options(o, i));
      switch (cls.kind) {
        case CubicClass::K4CircuitEverywhere:
          if (!are_isomorphic(g, k4) || !r_circuit(g) || !is_circuit(h0, g)) c.fail(g, "", "K4 is not a circuit");
          break;
        case CubicClass::K33RIndependentElseCircuit:
          if (!are_isomorphic(g, k33) || !cls.r_independent || !is_circuit(h0, g))
            c.fail(g, "", "K33 status wrong");
          break;
        case CubicClass::OmniforestCandidate:
          if (!cls.assertions_hold)
            c.fail(g, "", cls.r_independent ? "no Bernstein orientation" : "R-dependent");
          break;
      }
    });
  }
}

void k33(const SuiteOptions& o, Collector& c) {
  const Graph g = graphs::complete_bipartite(3, 3);
  c.count();
  if (!r_independent(g)) c.fail(g, "", "K33 is R-dependent");
  for (std::int64_t p : {0, 2, 3, 5}) {
    c.count();
    if (!is_circuit(hconn_oracle(6, p, verdict_options(o, static_cast<std::uint64_t>(p))), g))
      c.fail(g, "", "K33 is not an H-circuit in char " + std::to_string(p));
  }
}

void duality(const SuiteOptions& o, Collector& c) {
  for (int n = 4; n <= o.nmax; ++n) {
    for (std::int64_t p : {0, 2, 3}) {
      const auto r = check_duality(n, p, verdict_options(o, static_cast<std::uint64_t>(n * 10 + p)));
      c.count(r.subsets);
      c.note("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(r.h_bases) + " of " +
             std::to_string(r.subsets) + " subsets are bases");
      for (const auto& b : r.mismatches)
        c.fail(b, "", "base/complement mismatch, n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
}

void lemmas(const SuiteOptions& o, Collector& c) {
  const int n = o.nmax;
  const std::vector<MatroidOracle> oracles{laman_oracle(n + 1), hconn_oracle(n + 1, 0, verdict_options(o, 0))};

  // Every H-independent graph is R-independent.
  const auto small = graphs_up_to(n);
  parallel_for(small.size(), o.jobs, [&](std::size_t i) {
    c.count();
    if (h_independent(small[i], 0, verdict_options(o, i)).independent && !r_independent(small[i]))
      c.fail(small[i], "", "H-independent but R-dependent");
  });

  // Circuits: minimum degree 3, 2-connected, tripling trick, 2-cut decomposition.
  for (const auto& oracle : oracles) {
    const auto circuits = enumerate_circuits(oracle, n, n * (n - 1) / 2);
    c.note(oracle.label + ": " + std::to_string(circuits.size()) + " circuits on <= " + std::to_string(n) +
           " vertices");
    parallel_for(circuits.size(), o.jobs, [&](std::size_t i) {
      const Graph& d = circuits[i];
      c.count();
      if (d.min_degree() < 3) c.fail(d, "", oracle.label + " circuit with a vertex of degree < 3");
      if (!is_2_connected(d)) c.fail(d, "", oracle.label + " circuit is not 2-connected");
      if (d.min_degree() == 3) {
        const auto t = tripling_check(oracle, d);
        for (const auto& f : t.failures) c.fail(d, "", oracle.label + " tripling: " + f);
      }
      const auto cut = two_cut_check(oracle, d);
      for (const auto& f : cut.failures) c.fail(d, "", oracle.label + " 2-cut: " + f);
    });
  }

  // Connected properly subcubic graphs are independent.
  const auto larger = graphs_up_to(n + 1);
  parallel_for(larger.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = larger[i];
    if (!is_connected(g) || !is_properly_subcubic(g)) return;
    c.count();
    for (const auto& oracle : oracles)
      if (!oracle.indep(g)) c.fail(g, "", "properly subcubic but " + oracle.label + "-dependent");
  });

  // Connected cubic dependent graphs are circuits.
  for (int m = 4; m <= 8; m += 2) {
    for (const auto& g : generate_connected_cubic(m)) {
      for (const auto& oracle : oracles) {
        c.count();
        if (!oracle.indep(g) && !is_circuit(oracle, g))
          c.fail(g, "", "cubic " + oracle.label + "-dependent graph is not a circuit");
      }
    }
  }

  // R-bases: suppression at a degree-3 vertex, and a fundamental circuit through it.
  parallel_for(larger.size(), o.jobs, [&](std::size_t i) {
    const Graph& b = larger[i];
    if (b.order() < 4 || !r_base(b).verified) return;
    for (Vertex v = 1; v <= b.order(); ++v) {
      if (b.degree(v) != 3) continue;
      c.count();
      try {
        const auto s = suppress(b, v);
        if (!r_base(s.graph).verified) c.fail(b, std::to_string(v), "suppression is not an R-base");
      } catch (const std::exception& e) {
        c.fail(b, std::to_string(v), std::string("suppression failed: ") + e.what());
      }
      bool found = false;
      for (Vertex x = 1; x <= b.order() && !found; ++x) {
        for (Vertex y = x + 1; y <= b.order() && !found; ++y) {
          if (x == v || y == v || b.has_edge(x, y)) continue;
          const Graph circuit = fundamental_circuit(b, make_edge(x, y));
          found = circuit.degree(v) > 0;
        }
      }
      if (!found) c.fail(b, std::to_string(v), "no fundamental circuit through the degree-3 vertex");
    }
  });
}

void ufp(const SuiteOptions& o, Collector& c) {
  const auto all = graphs_up_to(o.nmax);
  parallel_for(all.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = all[i];
    for_each_bernstein_orientation(g, [&](const Orientation& d) {
      c.count();
      const Configuration conf = ufp_configuration(g, d);
      const UfpReport r = verify_ufp(conf);
      if (!r.passed() || !r.recoverable_checked) {
        std::string what;
        if (!r.forests) what += " forests";
        if (!r.out_degree) what += " out-degree";
        if (!r.bernstein) what += " bernstein";
        if (!r.recoverable_checked) what += " recoverability-unchecked";
        else if (!r.recoverable) what += " recoverable";
        c.fail(g, conf.to_string(), "UFP checks failed:" + what);
      }
      // The colouring before reversing red is recoverable as well.
      Configuration pre{conf.order, Orientation(conf.order, conf.red).reversed().arcs(), conf.blue};
      if (!is_recoverable(pre)) c.fail(g, pre.to_string(), "pre-reversal configuration not recoverable");
      return true;
    });
  });
}

void oracles(const SuiteOptions& o, Collector& c) {
  // Pebble game against subset counting.
  auto laman_check = [&](const Graph& g) {
    c.count();
    if (g.empty()) return;
    if (r_independent(g) != laman_count_ok(g)) c.fail(g, "", "pebble game disagrees with subset counts");
  };
  const auto up = graphs_up_to(o.nmax);
  parallel_for(up.size(), o.jobs, [&](std::size_t i) { laman_check(up[i]); });
  const int labeled_n = std::min(o.nmax, 6);
  parallel_for(labeled_count(labeled_n), o.jobs,
               [&](std::size_t mask) { laman_check(from_mask(labeled_n, static_cast<std::uint32_t>(mask))); });

  // Fast Bernstein test against the brute-force trail search.
  const auto connected = connected_graphs_up_to(10);
  parallel_for(connected.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = connected[i];
    const auto& edges = g.edges();
    for (std::uint32_t dir = 0; dir < (1U << edges.size()); ++dir) {
      std::vector<Arc> arcs;
      for (std::size_t k = 0; k < edges.size(); ++k)
        arcs.push_back(dir >> k & 1U ? Arc{edges[k].v, edges[k].u} : Arc{edges[k].u, edges[k].v});
      const Orientation d(g.order(), std::move(arcs));
      c.count();
      const bool slow = is_acyclic(d) && !alternating_trail_bruteforce(d).has_value();
      if (is_bernstein(d) != slow) c.fail(g, d.to_string(), "fast Bernstein test disagrees with trail search");
    }
  });

  // Randomized against symbolic H-rank.
  parallel_for(1000, o.jobs, [&](std::size_t i) {
    std::mt19937_64 rng(mix_seed(o.seed, 1000003 + i));
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    const Graph kn = graphs::complete(n);
    for (const auto& e : kn.edges())
      if (rng() % 2) edges.push_back(e);
    std::shuffle(edges.begin(), edges.end(), rng);
    if (edges.size() > o.symbolic_cap) edges.resize(o.symbolic_cap);
    const Graph g(n, edges);
    const std::int64_t p = std::array<std::int64_t, 4>{0, 2, 3, 5}[i % 4];
    c.count();
    const int fast = h_rank_randomized(g, FieldConfig::for_characteristic(p), o.trials, mix_seed(o.seed, i)).rank_lower_bound;
    const int exact = h_rank_symbolic(g, p, o.symbolic_cap);
    if (fast != exact)
      c.fail(g, "", "char " + std::to_string(p) + ": randomized rank " + std::to_string(fast) + ", symbolic " +
                        std::to_string(exact));
  });
}

void rank_formula(const SuiteOptions& o, Collector& c) {
  for (int n = 3; n <= o.nmax; ++n) {
    const Graph k = graphs::complete(n);
    const int expect = 2 * n - 3;
    c.count();
    if (r_rank(k) != expect) c.fail(k, "", "pebble rank " + std::to_string(r_rank(k)));
    for (std::int64_t p : {0, 2, 3, 5}) {
      const auto fc = FieldConfig::for_characteristic(p);
      const int fast = h_rank_randomized(k, fc, o.trials, mix_seed(o.seed, static_cast<std::uint64_t>(n))).rank_lower_bound;
      if (fast != expect) c.fail(k, "", "randomized H-rank " + std::to_string(fast) + " in char " + std::to_string(p));
      if (n <= 6) {
        const int exact = h_rank_symbolic(k, p, 15);
        if (exact != expect) c.fail(k, "", "symbolic H-rank " + std::to_string(exact) + " in char " + std::to_string(p));
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Collector&);

const std::map<std::string, SuiteFn>& suite_functions() {
  static const std::map<std::string, SuiteFn> fns{
      {"bernstein-equiv", bernstein_equiv}, {"char-p", char_p}, {"cubic", cubic},   {"k33", k33},
      {"duality", duality},                 {"lemmas", lemmas}, {"ufp", ufp},       {"oracles", oracles},
      {"rank", rank_formula}};
  return fns;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> info{
      {"bernstein-equiv", "every edge subset of K_n is H-independent iff Bernstein-orientable", 6, 6},
      {"char-p", "H-independence agrees in characteristics 0, 2, 3 and 5 on all edge subsets of K_n", 6, 6},
      {"cubic", "connected cubic graphs other than K4 and K33 are R-independent and Bernstein-orientable", 10, 12},
      {"k33", "K33 is R-independent and an H-circuit in characteristics 0, 2, 3 and 5", 6, 6},
      {"duality", "B is an H_{n,p} base iff its complement is a W_n(n-2,p) base", 6, 6},
      {"lemmas", "structural properties of circuits, bases and subcubic graphs", 6, 6},
      {"ufp", "Bernstein orientations yield forest configurations that are recoverable", 6, 6},
      {"oracles", "pebble game, fast Bernstein test and randomized rank agree with their brute-force oracles", 7, 7},
      {"rank", "K_n has rank 2n-3 under the pebble game and the hyperconnectivity matroid", 7, 7},
  };
  return info;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& fns = suite_functions();
  auto it = fns.find(name);
  if (it == fns.end()) throw PreconditionError("unknown suite '" + name + "'");
  const auto& info = *std::find_if(suites().begin(), suites().end(), [&](const SuiteInfo& s) { return s.name == name; });
  SuiteOptions o = opts;
  if (o.nmax == 0) o.nmax = info.default_nmax;
  if (o.nmax > info.max_nmax)
    throw CapExceeded("suite " + name + " is capped at nmax=" + std::to_string(info.max_nmax));
  if (o.nmax < 4) throw PreconditionError("nmax must be at least 4");
  if (o.trials < 1) throw PreconditionError("need at least one randomized trial");

  VerificationReport r;
  r.claim = info.claim;
  r.parameters = {{"nmax", o.nmax},
                  {"seed", static_cast<std::int64_t>(o.seed)},
                  {"trials", o.trials},
                  {"symbolic_cap", static_cast<std::int64_t>(o.symbolic_cap)}};
  const auto start = std::chrono::steady_clock::now();
  Collector c;
  it->second(o, c);
  c.finish(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace planerig
