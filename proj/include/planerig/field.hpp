#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "planerig/errors.hpp"

namespace planerig::field {

// Finite fields used for randomized rank evaluation. Every field type exposes
// Elem, zero(), one(), add, sub, mul, is_zero, from_int and random.

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);
// A uniformly drawn prime in [2^61, 2^62).
std::uint64_t random_prime_62(std::mt19937_64& rng);

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t q) : q_(q) {}
  std::uint64_t modulus() const noexcept { return q_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (q_ - b); }
  Elem mul(Elem a, Elem b) const noexcept { return mulmod(a, b, q_); }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  Elem from_int(std::int64_t c) const noexcept {
    auto r = static_cast<std::int64_t>(static_cast<__int128>(c) % static_cast<__int128>(q_));
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(q_) : r);
  }
  Elem random(std::mt19937_64& rng) const { return rng() % q_; }

 private:
  std::uint64_t q_;
};

// GF(2^k) for k <= 63, elements as bit vectors of polynomial coefficients.
class BinaryExtField {
 public:
  using Elem = std::uint64_t;

  // low: coefficients c_0..c_{k-1} of the monic modulus x^k + ..., bit i = c_i.
  BinaryExtField(int degree, std::uint64_t low);
  int degree() const noexcept { return k_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem add(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem sub(Elem a, Elem b) const noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept;
  bool is_zero(Elem a) const noexcept { return a == 0; }
  Elem from_int(std::int64_t c) const noexcept { return static_cast<Elem>(c & 1); }
  Elem random(std::mt19937_64& rng) const { return rng() & mask_; }

 private:
  int k_;
  std::uint64_t low_;
  std::uint64_t mask_;
};

inline constexpr int kMaxExtensionDegree = 64;

// GF(p^k) for odd (or any) prime p < 2^31 and k <= kMaxExtensionDegree.
class ExtField {
 public:
  using Elem = std::array<std::uint32_t, kMaxExtensionDegree>;

  // low: coefficients c_0..c_{k-1} of the monic modulus.
  ExtField(std::uint32_t p, std::vector<std::uint32_t> low);
  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }

  Elem zero() const noexcept { return Elem{}; }
  Elem one() const noexcept {
    Elem e{};
    e[0] = 1;
    return e;
  }
  Elem add(const Elem& a, const Elem& b) const noexcept;
  Elem sub(const Elem& a, const Elem& b) const noexcept;
  Elem mul(const Elem& a, const Elem& b) const noexcept;
  bool is_zero(const Elem& a) const noexcept;
  Elem from_int(std::int64_t c) const noexcept;
  Elem random(std::mt19937_64& rng) const;

 private:
  std::uint32_t p_;
  int k_;
  std::vector<std::uint32_t> low_;
  // Nonzero modulus coefficients as (index, value).
  std::vector<std::pair<int, std::uint64_t>> sparse_low_;
  // p < 2^16: products and their sums fit 64 bits without reduction.
  bool small_;
};

// First monic irreducible polynomial of degree k over F_p, in the order of
// the base-p integer formed by (c_{k-1} ... c_0). Rabin's test.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k);

// Rank by division-free elimination; m is consumed.
template <class F>
int rank_of(const F& f, std::vector<std::vector<typename F::Elem>> m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && f.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (f.is_zero(m[r][c])) continue;
      const auto factor = m[r][c];
      const auto scale = prow[c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = f.sub(f.mul(scale, m[r][j]), f.mul(factor, prow[j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace planerig::field
