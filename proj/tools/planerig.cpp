// planerig: independence queries, Bernstein orientations and verification
// suites for plane rigidity and hyperconnectivity matroids.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "planerig/bernstein.hpp"
#include "planerig/errors.hpp"
#include "planerig/graph6.hpp"
#include "planerig/hconn.hpp"
#include "planerig/laman.hpp"
#include "planerig/matroidlab.hpp"
#include "planerig/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace planerig;

enum Exit : int { kPass = 0, kClaimFailure = 1, kUsage = 2, kIoOrCap = 3, kParse = 4, kInternal = 5 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_graph6_stream(in);
}

void emit(const json& j, const std::string& format, const std::string& text) {
  if (format == "json") std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

// Shrinks g to an R-circuit by deleting edges that keep it dependent.
Graph laman_witness(const Graph& g) {
  Graph w = g;
  for (const auto& e : g.edges()) {
    const Graph smaller = w.without_edge(e);
    if (!r_independent(smaller)) w = smaller;
  }
  return w;
}

struct IndependenceArgs {
  std::string file;
  std::string matroid = "hconn";
  std::int64_t characteristic = 0;
  std::uint64_t seed = 1;
  int trials = 2;
  int dimension = 0;
  std::size_t symbolic_cap = kDefaultSymbolicCap;
  std::string format = "json";
};

int cmd_independence(const IndependenceArgs& a) {
  FieldConfig::for_characteristic(a.characteristic);
  const auto graphs = read_input(a.file);
  json results = json::array();
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    json r{{"index", i}, {"graph6", emit_graph6(g)}, {"vertices", g.order()}, {"edges", g.size()}};
    bool independent = false;
    std::string method;
    int rank = 0;
    std::optional<Graph> witness;
    if (a.matroid == "laman") {
      independent = r_independent(g);
      method = to_string(Method::Pebble);
      rank = r_rank(g);
      if (!independent) witness = laman_witness(g);
    } else {
      const VerdictOptions vo{a.trials, mix_seed(a.seed, i), a.symbolic_cap};
      GraphVerdict v;
      if (a.matroid == "hconn") {
        v = h_independent(g, a.characteristic, vo);
      } else {
        const int dim = a.dimension > 0 ? a.dimension : g.order() - 2;
        if (dim < 2) throw PreconditionError("wedge dimension must be at least 2 (graph " + std::to_string(i) + ")");
        r["dimension"] = dim;
        v = wedge_independent(g, dim, a.characteristic, vo);
      }
      independent = v.independent;
      method = to_string(v.method);
      rank = v.rank;
      witness = v.witness;
    }
    r["independent"] = independent;
    r["method"] = method;
    r["rank"] = rank;
    if (witness) r["witness"] = emit_graph6(*witness);
    results.push_back(r);
    text += emit_graph6(g) + (independent ? " independent " : " dependent ") + method + " rank=" + std::to_string(rank);
    if (witness) text += " witness=" + emit_graph6(*witness);
    text += '\n';
  }
  json out{{"schema", "planerig/independence/1"},
           {"matroid", a.matroid},
           {"characteristic", a.characteristic},
           {"seed", a.seed},
           {"trials", a.trials},
           {"results", results}};
  emit(out, a.format, text);
  return kPass;
}

struct OrientArgs {
  std::string file;
  bool ufp = false;
  std::string format = "json";
};

int cmd_orient(const OrientArgs& a) {
  const auto graphs = read_input(a.file);
  json results = json::array();
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    json r{{"index", i}, {"graph6", emit_graph6(g)}};
    const auto d = find_bernstein_orientation(g);
    text += emit_graph6(g) + ' ';
    if (!d) {
      r["orientation"] = nullptr;
      r["note"] = "search exhausted: no Bernstein orientation";
      text += "none\n";
      results.push_back(r);
      continue;
    }
    r["orientation"] = d->to_string();
    text += d->to_string();
    if (a.ufp) {
      const auto c = ufp_configuration(g, *d);
      const auto u = verify_ufp(c);
      r["configuration"] = c.to_string();
      json checks{{"forests", u.forests}, {"out_degree", u.out_degree}, {"bernstein", u.bernstein}};
      checks["recoverable"] = u.recoverable_checked ? json(u.recoverable) : json(nullptr);
      r["ufp_checks"] = checks;
      text += " | " + c.to_string();
    }
    text += '\n';
    results.push_back(r);
  }
  emit({{"schema", "planerig/orient/1"}, {"results", results}}, a.format, text);
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  SuiteOptions opts;
  std::string format = "json";
  bool timing = false;
  bool list = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const auto& s : suites())
      std::cout << s.name << " (nmax default " << s.default_nmax << ", cap " << s.max_nmax << "): " << s.claim << '\n';
    return kPass;
  }
  if (a.suite.empty()) throw PreconditionError("a suite name is required (see --list)");
  const auto r = run_suite(a.suite, a.opts);
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"instance", f.instance}, {"certificate", f.witness}, {"note", f.note}});
  json out{{"schema", "planerig/verify/1"},
           {"suite", a.suite},
           {"claim", r.claim},
           {"status", r.passed() ? "pass" : "fail"},
           {"parameters", params},
           {"instances", r.instances},
           {"failures", failures},
           {"notes", r.notes}};
  if (a.timing) out["wall_seconds"] = r.wall_seconds;
  std::string text = a.suite + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(r.instances) +
                     " instances, " + std::to_string(r.failures.size()) + " failures)\n";
  for (const auto& n : r.notes) text += "  " + n + '\n';
  for (const auto& f : r.failures) text += "  FAIL " + f.instance + " " + f.witness + " : " + f.note + '\n';
  if (a.timing) text += "  wall " + std::to_string(r.wall_seconds) + " s\n";
  emit(out, a.format, text);
  return r.passed() ? kPass : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane rigidity and hyperconnectivity matroid toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "text"};

  IndependenceArgs ia;
  auto* ind = app.add_subcommand("independence", "Independence verdicts for graphs in a graph6 file");
  ind->add_option("file", ia.file, "graph6 input, '-' or omitted for stdin");
  ind->add_option("--matroid", ia.matroid, "laman, hconn or wedge")->check(CLI::IsMember({"laman", "hconn", "wedge"}));
  ind->add_option("--char", ia.characteristic, "0 or a prime below 2^31");
  ind->add_option("--seed", ia.seed, "seed for randomized evaluation");
  ind->add_option("--trials", ia.trials, "random evaluations per rank query")->check(CLI::PositiveNumber);
  ind->add_option("--dimension", ia.dimension, "wedge dimension r (default: order - 2)");
  ind->add_option("--symbolic-cap", ia.symbolic_cap, "largest row count confirmed symbolically");
  ind->add_option("--format", ia.format)->check(CLI::IsMember(formats));

  OrientArgs oa;
  auto* ori = app.add_subcommand("orient", "Search Bernstein orientations (at most 10 vertices)");
  ori->add_option("file", oa.file, "graph6 input, '-' or omitted for stdin");
  ori->add_flag("--ufp", oa.ufp, "also emit the forest configuration and its checks");
  ori->add_option("--format", oa.format)->check(CLI::IsMember(formats));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", va.suite, "suite name");
  ver->add_flag("--list", va.list, "list suites");
  ver->add_option("--nmax", va.opts.nmax, "size parameter (suite default if omitted)");
  ver->add_option("--seed", va.opts.seed, "seed for randomized evaluation");
  ver->add_option("--trials", va.opts.trials, "random evaluations per rank query")->check(CLI::PositiveNumber);
  ver->add_option("--jobs", va.opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--symbolic-cap", va.opts.symbolic_cap, "largest row count confirmed symbolically");
  ver->add_option("--format", va.format)->check(CLI::IsMember(formats));
  ver->add_flag("--timing", va.timing, "include wall time (reports are otherwise byte-identical across runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*ind) return cmd_independence(ia);
    if (*ori) return cmd_orient(oa);
    return cmd_verify(va);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoOrCap;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kIoOrCap;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
