#include "planerig/linear_matroid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "planerig/field.hpp"

namespace planerig {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FieldConfig FieldConfig::for_characteristic(std::int64_t characteristic) {
  FieldConfig fc{characteristic, 1};
  if (characteristic > 0) {
    while (fc.field_bits() < kMinFieldBits) ++fc.extension_degree;
  }
  fc.validate();
  return fc;
}

double FieldConfig::field_bits() const {
  if (characteristic == 0) return 61.0;
  return extension_degree * std::log2(static_cast<double>(characteristic));
}

void FieldConfig::validate() const {
  if (characteristic < 0 || characteristic >= (std::int64_t{1} << 31) ||
      (characteristic > 0 && !field::is_prime(static_cast<std::uint64_t>(characteristic))))
    throw PreconditionError("characteristic must be 0 or a prime below 2^31");
  if (extension_degree < 1 || extension_degree > field::kMaxExtensionDegree)
    throw PreconditionError("extension degree out of range");
  if (field_bits() < kMinFieldBits) throw PreconditionError("evaluation field must have at least 2^40 elements");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Pebble: return "pebble";
    case Method::Symbolic: return "symbolic";
    case Method::RandomizedCertified: return "randomized-certified";
    case Method::Probabilistic: return "probabilistic";
  }
  return "unknown";
}

namespace {

const std::vector<std::uint32_t>& irreducible_for(std::uint32_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end()) it = cache.emplace(std::pair{p, k}, field::find_irreducible(p, k)).first;
  return it->second;
}

template <class F>
int evaluated_rank(const F& f, const PolyMatrix& m, std::mt19937_64& rng) {
  std::vector<typename F::Elem> point;
  point.reserve(static_cast<std::size_t>(m.ring.variables()));
  for (int v = 0; v < m.ring.variables(); ++v) point.push_back(f.random(rng));
  std::vector<std::vector<typename F::Elem>> values(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    values[r].reserve(m.cols);
    for (const auto& entry : m.rows[r])
      values[r].push_back(m.ring.evaluate<F>(f, entry, point));
  }
  return field::rank_of(f, std::move(values));
}

}  // namespace

RandomizedRank randomized_rank(const PolyMatrix& m, const FieldConfig& fc, int trials, std::uint64_t seed) {
  fc.validate();
  if (trials < 1) throw PreconditionError("need at least one randomized trial");
  if (fc.characteristic != 0 && fc.characteristic != m.ring.characteristic())
    throw PreconditionError("field characteristic does not match the polynomial ring");
  RandomizedRank out;
  const int rows = static_cast<int>(m.rows.size());
  if (rows == 0) return {0, true};
  for (int t = 0; t < trials && out.rank_lower_bound < rows; ++t) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    int r = 0;
    if (fc.characteristic == 0) {
      r = evaluated_rank(field::PrimeField(field::random_prime_62(rng)), m, rng);
    } else {
      const auto p = static_cast<std::uint32_t>(fc.characteristic);
      const auto& low = irreducible_for(p, fc.extension_degree);
      if (p == 2 && fc.extension_degree <= 63) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < low.size(); ++i) bits |= static_cast<std::uint64_t>(low[i]) << i;
        r = evaluated_rank(field::BinaryExtField(fc.extension_degree, bits), m, rng);
      } else {
        r = evaluated_rank(field::ExtField(p, low), m, rng);
      }
    }
    out.rank_lower_bound = std::max(out.rank_lower_bound, r);
  }
  out.certified_full = out.rank_lower_bound == rows;
  return out;
}

int symbolic_rank(PolyMatrix m) {
  const auto& ring = m.ring;
  auto& a = m.rows;
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols;
  Polynomial prev = ring.constant(1);
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t best_col = cols, best_count = rows + 1;
    for (std::size_t c = k; c < cols; ++c) {
      std::size_t count = 0;
      for (std::size_t r = k; r < rows; ++r) count += a[r][c].is_zero() ? 0 : 1;
      if (count > 0 && count < best_count) {
        best_count = count;
        best_col = c;
      }
    }
    if (best_col == cols) break;
    std::size_t best_row = rows, best_terms = 0;
    for (std::size_t r = k; r < rows; ++r) {
      const auto& e = a[r][best_col];
      if (!e.is_zero() && (best_row == rows || e.term_count() < best_terms)) {
        best_row = r;
        best_terms = e.term_count();
      }
    }
    std::swap(a[k], a[best_row]);
    for (auto& row : a) std::swap(row[k], row[best_col]);

    const Polynomial& pivot = a[k][k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Polynomial lead = a[i][k];
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial num = ring.mul(pivot, a[i][j]);
        if (!lead.is_zero() && !a[k][j].is_zero()) num = ring.sub(num, ring.mul(lead, a[k][j]));
        a[i][j] = ring.exact_div(num, prev);
      }
      a[i][k] = Polynomial{};
    }
    prev = pivot;
  }
  return static_cast<int>(k);
}

RowVerdict row_independence(std::size_t rows,
                            const std::function<PolyMatrix(const std::vector<std::size_t>&)>& build,
                            std::int64_t characteristic, const VerdictOptions& opts) {
  const auto fc = FieldConfig::for_characteristic(characteristic);
  std::vector<std::size_t> all(rows);
  for (std::size_t i = 0; i < rows; ++i) all[i] = i;
  std::uint64_t salt = 0;
  auto probe = [&](const std::vector<std::size_t>& idx) {
    return randomized_rank(build(idx), fc, opts.trials, mix_seed(opts.seed, salt++));
  };

  RowVerdict out;
  const auto whole = probe(all);
  out.rank = whole.rank_lower_bound;
  if (whole.certified_full) {
    out.independent = true;
    out.method = Method::RandomizedCertified;
    return out;
  }

  // Every removal that keeps the set rank-deficient is taken; what remains
  // is dependent while each single-row deletion is certified independent.
  std::vector<std::size_t> current = all;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::size_t> trial;
    trial.reserve(current.size());
    for (auto r : current)
      if (r != i) trial.push_back(r);
    if (trial.size() == current.size()) continue;
    if (!probe(trial).certified_full) current = std::move(trial);
  }

  out.independent = false;
  out.witness = current;
  if (current.size() <= opts.symbolic_cap) {
    if (symbolic_rank(build(current)) < static_cast<int>(current.size())) {
      out.method = Method::Symbolic;
      return out;
    }
    // The random evaluation undercounted; settle the whole set exactly.
    if (rows <= opts.symbolic_cap) {
      out.rank = symbolic_rank(build(all));
      out.independent = out.rank == static_cast<int>(rows);
      out.method = Method::Symbolic;
      if (out.independent) out.witness.clear();
      else out.witness = all;
      return out;
    }
  }
  out.method = Method::Probabilistic;
  return out;
}

}  // namespace planerig
