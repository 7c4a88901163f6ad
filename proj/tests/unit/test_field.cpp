#include <catch2/catch_amalgamated.hpp>

#include "planerig/errors.hpp"
#include "planerig/field.hpp"
#include "planerig/linear_matroid.hpp"
#include "planerig/polynomial.hpp"

using namespace planerig;
using namespace planerig::field;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Coeffs = std::vector<std::uint32_t>;

Coeffs trimmed(Coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  a = trimmed(std::move(a));
  const std::uint64_t inv = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    a = trimmed(std::move(a));
  }
  return a;
}

// No monic factor of degree 1..k/2.
bool irreducible_by_trial_division(std::uint32_t p, const Coeffs& monic) {
  const int k = static_cast<int>(monic.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    Coeffs f(static_cast<std::size_t>(d) + 1, 0);
    f[static_cast<std::size_t>(d)] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i, c /= p) f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
      if (poly_mod(monic, f, p).empty()) return false;
    }
  }
  return true;
}

template <class F>
void check_field_axioms(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.sub(f.add(a, b), b) == a);
    CHECK(f.mul(a, f.one()) == a);
    CHECK(f.is_zero(f.mul(a, f.zero())));
  }
}

// a^(q-1) == 1 for nonzero a in a field of order q = p^k.
template <class F>
void check_fermat(const F& f, std::uint32_t p, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 5; ++i) {
    auto a = f.random(rng);
    if (f.is_zero(a)) continue;
    // a^(p^k) by k successive p-th powers.
    auto x = a;
    for (int j = 0; j < k; ++j) {
      auto acc = f.one(), base = x;
      for (std::uint32_t e = p; e; e >>= 1) {
        if (e & 1) acc = f.mul(acc, base);
        base = f.mul(base, base);
      }
      x = acc;
    }
    CHECK(x == a);
  }
}

}  // namespace

TEST_CASE("modular arithmetic and primality") {
  CHECK(mulmod(~0ULL, ~0ULL, 1000000007ULL) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(~0ULL) * ~0ULL) % 1000000007ULL));
  CHECK(powmod(3, 1000000006ULL, 1000000007ULL) == 1);
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5; ++i) {
    const auto q = random_prime_62(rng);
    CHECK(q >= (1ULL << 61));
    CHECK(q < (1ULL << 62));
    CHECK(is_prime(q));
  }
}

TEST_CASE("irreducible polynomials match trial division") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (int k = 1; k <= (p == 2 ? 10 : 5); ++k) {
      auto low = find_irreducible(p, k);
      REQUIRE(static_cast<int>(low.size()) == k);
      Coeffs monic = low;
      monic.push_back(1);
      CHECK(irreducible_by_trial_division(p, monic));
    }
  }
  // First in base-p order: x^2 + 1 over F_3 and x^2 + x + 1 over F_2.
  CHECK(find_irreducible(3, 2) == Coeffs{1, 0});
  CHECK(find_irreducible(2, 2) == Coeffs{1, 1});
}

TEST_CASE("evaluation fields satisfy the field axioms") {
  check_field_axioms(PrimeField(1000000007ULL), 1);
  check_field_axioms(PrimeField(2305843009213693951ULL), 2);
  const auto b = find_irreducible(2, 40);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < b.size(); ++i) bits |= static_cast<std::uint64_t>(b[i]) << i;
  const BinaryExtField gf2(40, bits);
  check_field_axioms(gf2, 3);
  check_fermat(gf2, 2, 40, 4);
  const ExtField gf3(3, find_irreducible(3, 26));
  check_field_axioms(gf3, 5);
  check_fermat(gf3, 3, 26, 6);
  const ExtField gf_big(65537, find_irreducible(65537, 3));
  check_field_axioms(gf_big, 7);
  check_fermat(gf_big, 65537, 3, 8);
}

TEST_CASE("field configurations") {
  CHECK(FieldConfig::for_characteristic(2).extension_degree == 40);
  CHECK(FieldConfig::for_characteristic(3).extension_degree == 26);
  CHECK(FieldConfig::for_characteristic(0).extension_degree == 1);
  CHECK_THROWS_AS(FieldConfig::for_characteristic(4), PreconditionError);
  CHECK_THROWS_AS(FieldConfig::for_characteristic(-1), PreconditionError);
  CHECK_THROWS_AS((FieldConfig{2, 10}.validate()), PreconditionError);
}

TEST_CASE("polynomial arithmetic") {
  const PolyRing ring(3, 0);
  const auto x = ring.variable(0), y = ring.variable(1), z = ring.variable(2);
  const auto a = ring.add(ring.mul(x, y), ring.constant(-2));
  const auto b = ring.sub(ring.add(x, z), ring.mul(y, y));
  const auto prod = ring.mul(a, b);
  CHECK(ring.exact_div(prod, a) == b);
  CHECK(ring.exact_div(prod, b) == a);
  CHECK(ring.sub(a, a).is_zero());
  CHECK_THROWS_AS(ring.exact_div(a, b), std::domain_error);
  CHECK(ring.to_string(ring.mul(x, x)) == "1*x0^2");

  const PolyRing r2(2, 2);
  const auto u = r2.variable(0), v = r2.variable(1);
  const auto sq = r2.mul(r2.add(u, v), r2.add(u, v));
  CHECK(sq == r2.add(r2.mul(u, u), r2.mul(v, v)));  // Frobenius
  CHECK(r2.add(u, u).is_zero());
  CHECK_THROWS_AS(PolyRing(2, 6), PreconditionError);
}

TEST_CASE("symbolic and randomized rank") {
  // det [[x, y], [y, x]] = x^2 - y^2 is nonzero in every characteristic.
  // [[x, y], [2x, 2y]] has rank 1; in char 2 its second row vanishes.
  for (std::int64_t p : {0, 2, 3}) {
    const PolyRing ring(2, p);
    const auto x = ring.variable(0), y = ring.variable(1);
    PolyMatrix full{ring, 2, {{x, y}, {y, x}}};
    PolyMatrix low{ring, 2, {{x, y}, {ring.add(x, x), ring.add(y, y)}}};
    CHECK(symbolic_rank(full) == 2);
    CHECK(symbolic_rank(low) == 1);
    const auto fc = FieldConfig::for_characteristic(p);
    CHECK(randomized_rank(full, fc, 2, 1).certified_full);
    CHECK(randomized_rank(low, fc, 2, 1).rank_lower_bound == 1);
  }
  const PolyRing r2(2, 2);
  const auto x = r2.variable(0), y = r2.variable(1);
  PolyMatrix zero_row{r2, 2, {{r2.add(x, x), r2.constant(2)}}};
  CHECK(symbolic_rank(zero_row) == 0);
}

TEST_CASE("row independence returns a minimal dependent witness") {
  const PolyRing ring(3, 0);
  const auto x = ring.variable(0), y = ring.variable(1), z = ring.variable(2);
  // Rows 0 and 2 are proportional; row 1 is independent of them.
  const std::vector<std::vector<Polynomial>> rows = {
      {x, y, ring.constant(0)}, {ring.constant(0), z, x}, {ring.mul(x, z), ring.mul(y, z), ring.constant(0)}};
  auto build = [&](const std::vector<std::size_t>& idx) {
    PolyMatrix m{ring, 3, {}};
    for (auto i : idx) m.rows.push_back(rows[i]);
    return m;
  };
  const auto v = row_independence(3, build, 0, {});
  CHECK_FALSE(v.independent);
  CHECK(v.method == Method::Symbolic);
  CHECK(v.witness == std::vector<std::size_t>{0, 2});
  const auto w = row_independence(2, [&](const std::vector<std::size_t>& idx) { return build(idx); }, 0, {});
  CHECK(w.independent);
  CHECK(w.method == Method::RandomizedCertified);
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
}
