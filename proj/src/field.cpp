#include "planerig/field.hpp"

#include <algorithm>

namespace planerig::field {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::mt19937_64& rng) {
  while (true) {
    std::uint64_t c = (rng() >> 3) | (std::uint64_t{1} << 61) | 1U;
    if (is_prime(c)) return c;
  }
}

BinaryExtField::BinaryExtField(int degree, std::uint64_t low)
    : k_(degree), low_(low), mask_(degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1) {
  if (degree < 1 || degree > 63) throw PreconditionError("binary extension degree must be in 1..63");
}

BinaryExtField::Elem BinaryExtField::mul(Elem a, Elem b) const noexcept {
  unsigned __int128 acc = 0;
  for (unsigned __int128 aa = a; b; b >>= 1, aa <<= 1)
    if (b & 1U) acc ^= aa;
  const unsigned __int128 full = (static_cast<unsigned __int128>(1) << k_) | low_;
  for (int i = 2 * k_ - 2; i >= k_; --i)
    if ((acc >> i) & 1U) acc ^= full << (i - k_);
  return static_cast<Elem>(acc);
}

ExtField::ExtField(std::uint32_t p, std::vector<std::uint32_t> low)
    : p_(p), k_(static_cast<int>(low.size())), low_(std::move(low)), small_(p < (1U << 16)) {
  if (k_ < 1 || k_ > kMaxExtensionDegree) throw PreconditionError("extension degree out of range");
  for (int j = 0; j < k_; ++j)
    if (low_[static_cast<std::size_t>(j)] != 0) sparse_low_.emplace_back(j, low_[static_cast<std::size_t>(j)]);
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const noexcept {
  Elem r{};
  for (int i = 0; i < k_; ++i) {
    std::uint32_t s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const noexcept {
  Elem r{};
  for (int i = 0; i < k_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (p_ - b[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const noexcept {
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
  if (small_) {
    // Every partial sum stays below 2k p^2 < 2^39.
    for (int i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      const std::uint64_t ai = a[i];
      for (int j = 0; j < k_; ++j) t[i + j] += ai * b[j];
    }
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      const std::uint64_t c = t[i] % p_;
      if (c == 0) continue;
      const std::uint64_t neg = p_ - c;
      for (const auto& [j, lj] : sparse_low_) t[i - k_ + j] += neg * lj;
    }
  } else {
    std::array<unsigned __int128, 2 * kMaxExtensionDegree> acc{};
    for (int i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < k_; ++j) acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
    for (int i = 0; i < 2 * k_ - 1; ++i) t[i] = static_cast<std::uint64_t>(acc[i] % p_);
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      const std::uint64_t c = t[i] % p_;
      if (c == 0) continue;
      const std::uint64_t neg = p_ - c;
      for (const auto& [j, lj] : sparse_low_) t[i - k_ + j] = (t[i - k_ + j] + neg * lj) % p_;
    }
  }
  Elem r{};
  for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(t[i] % p_);
  return r;
}

bool ExtField::is_zero(const Elem& a) const noexcept {
  return std::all_of(a.begin(), a.begin() + k_, [](auto c) { return c == 0; });
}

ExtField::Elem ExtField::from_int(std::int64_t c) const noexcept {
  Elem r{};
  auto m = c % static_cast<std::int64_t>(p_);
  r[0] = static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
  return r;
}

ExtField::Elem ExtField::random(std::mt19937_64& rng) const {
  Elem r{};
  for (int i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(rng() % p_);
  return r;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t inv_lead = powmod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::uint64_t c = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  for (; e; e >>= 1) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  // frob[i] = x^(p^i) mod f
  std::vector<Poly> frob{Poly{0, 1}};
  for (int i = 1; i <= k; ++i) frob.push_back(poly_powmod(frob.back(), p, f, p));
  Poly x{0, 1};
  auto minus_x = [&](Poly a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[k]).empty()) return false;
  for (int q = 2; q <= k; ++q) {
    if (k % q) continue;
    bool prime_q = true;
    for (int d = 2; d * d <= q; ++d) prime_q = prime_q && q % d;
    if (!prime_q) continue;
    auto g = poly_gcd(f, minus_x(frob[k / q]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k) {
  if (!is_prime(p)) throw PreconditionError("characteristic must be prime");
  if (k < 1) throw PreconditionError("extension degree must be positive");
  std::vector<std::uint32_t> low(static_cast<std::size_t>(k), 0);
  if (k == 1) return low;  // x
  while (true) {
    // increment the base-p counter c_0 + c_1 p + ...
    for (int i = 0; i < k; ++i) {
      if (++low[i] < p) break;
      low[i] = 0;
    }
    if (low[0] == 0) continue;
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (irreducible(f, p)) return low;
  }
}

}  // namespace planerig::field
