#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace planerig {

// A failing instance with enough information to replay it.
struct Failure {
  std::string instance;  // graph6
  std::string witness;   // orientation, configuration or graph6, may be empty
  std::string note;
  bool operator<(const Failure& o) const {
    return std::tie(instance, witness, note) < std::tie(o.instance, o.witness, o.note);
  }
};

struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::size_t instances = 0;
  // Sorted, so reports do not depend on scheduling.
  std::vector<Failure> failures;
  // Informational lines, e.g. per-size counts.
  std::vector<std::string> notes;
  double wall_seconds = 0;
  bool passed() const noexcept { return failures.empty(); }
};

struct SuiteOptions {
  int nmax = 0;  // 0 selects the suite default
  std::uint64_t seed = 1;
  int trials = 2;
  int jobs = 1;
  std::size_t symbolic_cap = 14;
};

struct SuiteInfo {
  std::string name;
  std::string claim;
  int default_nmax;
  int max_nmax;
};

const std::vector<SuiteInfo>& suites();

// Throws PreconditionError for unknown names and CapExceeded when nmax is
// beyond the suite's cap.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace planerig
