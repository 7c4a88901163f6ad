#include "planerig/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "planerig/field.hpp"

namespace planerig {

PolyRing::PolyRing(int variables, std::int64_t characteristic)
    : vars_(variables), char_(characteristic) {
  if (variables < 1 || variables > 64) throw CapExceeded("polynomial rings support 1..64 variables");
  if (characteristic < 0 || characteristic >= (std::int64_t{1} << 31) ||
      (characteristic > 0 && !field::is_prime(static_cast<std::uint64_t>(characteristic))))
    throw PreconditionError("characteristic must be 0 or a prime below 2^31");
  bits_ = std::min(16, 128 / variables);
  if (bits_ < 2) throw CapExceeded("too many variables for packed monomials");
  field_mask_ = (Monomial{1} << bits_) - 1;
  for (int v = 0; v < vars_; ++v) guard_ |= Monomial{1} << ((vars_ - 1 - v) * bits_ + bits_ - 1);
}

std::int64_t PolyRing::reduce(std::int64_t c) const {
  if (char_ == 0) return c;
  c %= char_;
  return c < 0 ? c + char_ : c;
}

std::int64_t PolyRing::cadd(std::int64_t a, std::int64_t b) const {
  if (char_ > 0) return (a + b) % char_;
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t PolyRing::cmul(std::int64_t a, std::int64_t b) const {
  if (char_ > 0) return static_cast<std::int64_t>(static_cast<__int128>(a) * b % char_);
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t PolyRing::cdiv(std::int64_t a, std::int64_t b) const {
  if (char_ > 0) {
    auto inv = field::powmod(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(char_ - 2),
                             static_cast<std::uint64_t>(char_));
    return cmul(a, static_cast<std::int64_t>(inv));
  }
  if (a % b != 0) throw std::domain_error("inexact coefficient division");
  return a / b;
}

Monomial PolyRing::mono_mul(Monomial a, Monomial b) const {
  Monomial s = a + b;
  if (s & guard_) throw CapExceeded("monomial exponent overflow");
  return s;
}

int PolyRing::exponent(Monomial m, int var) const {
  return static_cast<int>((m >> ((vars_ - 1 - var) * bits_)) & field_mask_);
}

Monomial PolyRing::monomial(std::span<const int> exponents) const {
  Monomial m = 0;
  for (int v = 0; v < vars_ && v < static_cast<int>(exponents.size()); ++v) {
    if (exponents[v] < 0 || exponents[v] > max_exponent()) throw CapExceeded("exponent out of range");
    m |= static_cast<Monomial>(exponents[v]) << ((vars_ - 1 - v) * bits_);
  }
  return m;
}

Polynomial PolyRing::combine(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial out;
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = cadd(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Polynomial PolyRing::constant(std::int64_t c) const {
  Polynomial p;
  if (auto r = reduce(c)) p.terms_.push_back({0, r});
  return p;
}

Polynomial PolyRing::variable(int index, std::int64_t coeff) const {
  if (index < 0 || index >= vars_) throw PreconditionError("variable index out of range");
  Polynomial p;
  if (auto r = reduce(coeff)) p.terms_.push_back({Monomial{1} << ((vars_ - 1 - index) * bits_), r});
  return p;
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  for (auto& t : terms) t.coeff = reduce(t.coeff);
  return combine(std::move(terms));
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  auto& r = out.terms_;
  r.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
      r.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
      r.push_back(b.terms_[j++]);
    } else {
      auto c = cadd(a.terms_[i].coeff, b.terms_[j].coeff);
      if (c != 0) r.push_back({a.terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  Polynomial out = a;
  for (auto& t : out.terms_) t.coeff = char_ > 0 ? (char_ - t.coeff) % char_ : -t.coeff;
  return out;
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({mono_mul(s.mono, t.mono), cmul(s.coeff, t.coeff)});
  return combine(std::move(terms));
}

Polynomial PolyRing::exact_div(const Polynomial& a, const Polynomial& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  const Term lead = b.terms_.front();
  std::map<Monomial, std::int64_t, std::greater<>> rem;
  for (const auto& t : a.terms_) rem.emplace(t.mono, t.coeff);
  Polynomial q;
  while (!rem.empty()) {
    auto [m, c] = *rem.begin();
    // m divisible by lead.mono iff no field borrows.
    if ((((m | guard_) - lead.mono) & guard_) != guard_) throw std::domain_error("inexact polynomial division");
    const Monomial qm = m - lead.mono;
    const std::int64_t qc = cdiv(c, lead.coeff);
    q.terms_.push_back({qm, qc});
    for (const auto& t : b.terms_) {
      const Monomial pm = t.mono + qm;
      const std::int64_t pc = cmul(qc, t.coeff);
      auto it = rem.find(pm);
      if (it == rem.end()) {
        rem.emplace(pm, char_ > 0 ? (char_ - pc) % char_ : -pc);
      } else {
        it->second = cadd(it->second, char_ > 0 ? (char_ - pc) % char_ : -pc);
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.coeff);
    for (int v = 0; v < vars_; ++v) {
      int e = exponent(t.mono, v);
      if (e == 0) continue;
      out += "*x" + std::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace planerig
