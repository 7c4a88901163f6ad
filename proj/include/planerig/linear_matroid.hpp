#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "planerig/polynomial.hpp"

namespace planerig {

// Rank machinery for matrices whose entries are polynomials with integer
// coefficients: exact rank over the fraction field (symbolic) and
// evaluation at random points of a large finite field (randomized).

struct PolyMatrix {
  PolyRing ring;
  std::size_t cols = 0;
  std::vector<std::vector<Polynomial>> rows;
};

// The characteristic of the matroid and the field used to evaluate it.
struct FieldConfig {
  // 0 (evaluate over random primes in [2^61, 2^62)) or a prime p < 2^31
  // (evaluate over GF(p^extension_degree)).
  std::int64_t characteristic = 0;
  int extension_degree = 1;

  // Smallest extension with at least 2^40 elements.
  static FieldConfig for_characteristic(std::int64_t characteristic);
  // log2 of the evaluation field size.
  double field_bits() const;
  void validate() const;
};

inline constexpr double kMinFieldBits = 40.0;

struct RandomizedRank {
  int rank_lower_bound = 0;
  // rank_lower_bound equals the row count: a nonzero maximal minor exists.
  bool certified_full = false;
};

RandomizedRank randomized_rank(const PolyMatrix& m, const FieldConfig& fc, int trials, std::uint64_t seed);

// Fraction-free elimination over the polynomial ring, pivoting on the
// structurally sparsest column. Exact rank over the fraction field.
int symbolic_rank(PolyMatrix m);

enum class Method { Pebble, Symbolic, RandomizedCertified, Probabilistic };
std::string to_string(Method m);

struct RowVerdict {
  bool independent = false;
  Method method = Method::Probabilistic;
  // Exact when method is Symbolic and the whole set was eliminated, a lower
  // bound otherwise.
  int rank = 0;
  // For dependent verdicts: row indices of a minimal dependent subset.
  std::vector<std::size_t> witness;
};

struct VerdictOptions {
  int trials = 2;
  std::uint64_t seed = 1;
  std::size_t symbolic_cap = 14;
};

// Independence of a row set of size `rows`. build(indices) yields the matrix
// restricted to those rows. Positive answers come from a certified random
// evaluation; negative answers shrink the set to a minimal dependent subset
// and confirm it symbolically when it fits under the cap.
RowVerdict row_independence(std::size_t rows,
                            const std::function<PolyMatrix(const std::vector<std::size_t>&)>& build,
                            std::int64_t characteristic, const VerdictOptions& opts);

// SplitMix64 step; derives independent sub-seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace planerig
