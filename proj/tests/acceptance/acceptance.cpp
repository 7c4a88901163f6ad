// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "planerig/bernstein.hpp"
#include "planerig/hconn.hpp"
#include "planerig/laman.hpp"
#include "planerig/matroidlab.hpp"
#include "planerig/suites.hpp"

using namespace planerig;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void absorb(const VerificationReport& r, const std::string& suite) {
    require(r.passed(), suite + ": " + std::to_string(r.failures.size()) + " failures" +
                            (r.failures.empty() ? "" : " (first " + r.failures.front().instance + ": " +
                                                           r.failures.front().note + ")"));
    if (!detail.empty() || !r.passed()) return;
    detail = suite + ": " + std::to_string(r.instances) + " instances";
  }
};

SuiteOptions options() {
  SuiteOptions o;
  o.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return o;
}

Outcome bernstein_equivalence() {
  Outcome out;
  out.absorb(run_suite("bernstein-equiv", options()), "bernstein-equiv");
  return out;
}

Outcome characteristic_invariance() {
  Outcome out;
  out.absorb(run_suite("char-p", options()), "char-p");
  return out;
}

Outcome cubic_classification() {
  Outcome out;
  const int expected[] = {1, 2, 5, 19};
  std::string counts;
  for (int i = 0; i < 4; ++i) {
    const int n = 4 + 2 * i;
    const auto gen = generate_connected_cubic(n);
    const auto second = enumerate_cubic_orderly(n);
    out.require(static_cast<int>(gen.size()) == expected[i], "n=" + std::to_string(n) + " generated " +
                                                                 std::to_string(gen.size()));
    out.require(static_cast<int>(second.size()) == expected[i], "n=" + std::to_string(n) + " second enumerator " +
                                                                    std::to_string(second.size()));
    counts += (i ? "," : "") + std::to_string(gen.size());
  }
  SuiteOptions o = options();
  o.nmax = 10;
  const auto r = run_suite("cubic", o);
  out.require(r.passed(), "cubic suite: " + std::to_string(r.failures.size()) + " failures");
  if (out.ok) out.detail = "counts " + counts + "; " + std::to_string(r.instances) + " graphs classified";
  return out;
}

Outcome k33_status() {
  Outcome out;
  const Graph k33 = graphs::complete_bipartite(3, 3);
  out.require(r_independent(k33), "K33 R-dependent");
  for (std::int64_t p : {0, 2, 3, 5}) {
    out.require(is_circuit(hconn_oracle(6, p), k33), "not an H-circuit in char " + std::to_string(p));
    out.require(h_rank_symbolic(k33, p) == 8, "symbolic rank != 8 in char " + std::to_string(p));
  }
  const auto r = run_suite("k33", options());
  out.require(r.passed(), "k33 suite failed");
  if (out.ok) out.detail = "R-independent; H-circuit in char 0,2,3,5";
  return out;
}

Outcome duality() {
  Outcome out;
  std::size_t subsets = 0;
  for (int n = 4; n <= 6; ++n)
    for (std::int64_t p : {0, 2, 3}) {
      const auto r = check_duality(n, p);
      subsets += r.subsets;
      out.require(r.passed(), "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                                  std::to_string(r.mismatches.size()) + " mismatches");
      out.require(r.h_bases == r.w_bases, "base counts differ at n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  if (out.ok) out.detail = std::to_string(subsets) + " subsets over n=4..6, p=0,2,3";
  return out;
}

Outcome ufp_pipeline() {
  Outcome out;
  out.absorb(run_suite("ufp", options()), "ufp");
  return out;
}

Outcome rank_formula() {
  Outcome out;
  for (int n = 3; n <= 7; ++n) {
    const Graph k = graphs::complete(n);
    out.require(r_rank(k) == 2 * n - 3, "pebble rank of K" + std::to_string(n));
    for (std::int64_t p : {0, 2, 3, 5}) {
      out.require(h_rank_randomized(k, FieldConfig::for_characteristic(p), 2, 1).rank_lower_bound == 2 * n - 3,
                  "randomized rank of K" + std::to_string(n) + " char " + std::to_string(p));
      if (n <= 6)
        out.require(h_rank_symbolic(k, p, 15) == 2 * n - 3,
                    "symbolic rank of K" + std::to_string(n) + " char " + std::to_string(p));
    }
  }
  out.require(run_suite("rank", options()).passed(), "rank suite failed");
  if (out.ok) out.detail = "2n-3 for K3..K7";
  return out;
}

Outcome structural_lemmas() {
  Outcome out;
  out.absorb(run_suite("lemmas", options()), "lemmas");
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  out.absorb(run_suite("oracles", options()), "oracles");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {"1 bernstein-equivalence", bernstein_equivalence},
      {"2 characteristic-invariance", characteristic_invariance},
      {"3 cubic-classification", cubic_classification},
      {"4 k33-status", k33_status},
      {"5 duality", duality},
      {"6 ufp-pipeline", ufp_pipeline},
      {"7 rank-formula", rank_formula},
      {"8 structural-lemmas", structural_lemmas},
      {"9 oracle-agreement", oracle_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed ? 1 : 0;
}
