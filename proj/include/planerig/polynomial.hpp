#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "planerig/errors.hpp"

namespace planerig {

// Sparse multivariate polynomials over Z (characteristic 0) or F_p.
//
// Monomials pack all exponents into one 128-bit word, bits_per_var bits per
// variable with the top bit of each field kept clear as an overflow guard.
// Packed-integer order is lexicographic and compatible with multiplication.
using Monomial = unsigned __int128;

struct Term {
  Monomial mono;
  std::int64_t coeff;  // nonzero; reduced to [0, p) in characteristic p
  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  // Strictly decreasing monomials.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool operator==(const Polynomial&) const = default;

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

class PolyRing {
 public:
  // characteristic is 0 or a prime below 2^31.
  PolyRing(int variables, std::int64_t characteristic);

  int variables() const noexcept { return vars_; }
  std::int64_t characteristic() const noexcept { return char_; }
  int max_exponent() const noexcept { return static_cast<int>((Monomial{1} << (bits_ - 1)) - 1); }

  Polynomial constant(std::int64_t c) const;
  Polynomial variable(int index, std::int64_t coeff = 1) const;
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  // a / b where b divides a exactly; throws std::domain_error otherwise.
  Polynomial exact_div(const Polynomial& a, const Polynomial& b) const;

  int exponent(Monomial m, int var) const;
  Monomial monomial(std::span<const int> exponents) const;
  std::string to_string(const Polynomial& p) const;

  // Evaluates p at point (one field element per variable) in field f.
  template <class F>
  typename F::Elem evaluate(const F& f, const Polynomial& p, std::span<const typename F::Elem> point) const {
    auto acc = f.zero();
    for (const auto& t : p.terms()) {
      auto prod = f.from_int(t.coeff);
      for (int v = 0; v < vars_; ++v)
        for (int e = exponent(t.mono, v); e > 0; --e) prod = f.mul(prod, point[static_cast<std::size_t>(v)]);
      acc = f.add(acc, prod);
    }
    return acc;
  }

 private:
  std::int64_t reduce(std::int64_t c) const;
  std::int64_t cadd(std::int64_t a, std::int64_t b) const;
  std::int64_t cmul(std::int64_t a, std::int64_t b) const;
  std::int64_t cdiv(std::int64_t a, std::int64_t b) const;
  Monomial mono_mul(Monomial a, Monomial b) const;
  Polynomial combine(std::vector<Term> terms) const;

  int vars_;
  std::int64_t char_;
  int bits_;
  Monomial guard_ = 0;
  Monomial field_mask_ = 0;
};

}  // namespace planerig
