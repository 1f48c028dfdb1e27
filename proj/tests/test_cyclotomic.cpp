#include <random>

#include "doctest.h"
#include "stickel/cyclotomic.hpp"

using namespace stickel;

namespace {

// Exact division a / b of integer polynomials (b monic).
IntPoly poly_div(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& r : a) REQUIRE(r == 0);
  return q;
}

// Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d.
IntPoly phi_by_division(std::int64_t n, std::vector<IntPoly>& memo) {
  IntPoly p(static_cast<std::size_t>(n + 1), 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div(p, memo[d]);
  return p;
}

Cyclotomic random_element(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
  std::uniform_int_distribution<std::int64_t> exp(0, n - 1);
  std::vector<std::pair<Rational, std::int64_t>> terms;
  for (int i = 0; i < 4; ++i)
    terms.emplace_back(make_rational(Integer(coef(rng)), Integer(den(rng))), exp(rng));
  return Cyclotomic::from_terms(n, terms);
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials agree with recursive division up to 200") {
    std::vector<IntPoly> memo(201);
    for (std::int64_t n = 1; n <= 200; ++n) {
      memo[n] = phi_by_division(n, memo);
      CHECK(cyclo_poly(n) == memo[n]);
      CHECK(static_cast<std::int64_t>(memo[n].size()) - 1 == euler_phi(n));
    }
  }

  TEST_CASE("product of Phi_d over d | n is x^n - 1") {
    for (std::int64_t n = 1; n <= 200; ++n) {
      IntPoly prod{1};
      for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) prod = poly_mul(prod, cyclo_poly(d));
      IntPoly expect(static_cast<std::size_t>(n + 1), 0);
      expect[0] = -1;
      expect[n] = 1;
      CHECK(prod == expect);
    }
  }

  TEST_CASE("small values") {
    CHECK(cyclo_poly(1) == IntPoly{-1, 1});
    CHECK(cyclo_poly(6) == IntPoly{1, -1, 1});
    CHECK(cyclo_poly(105)[7] == -2);
  }

  TEST_CASE("roots of unity") {
    const auto z = Cyclotomic::root_of_unity(6, 1);
    Cyclotomic p = 1L;
    for (int i = 0; i < 6; ++i) p *= z;
    CHECK(p == Cyclotomic(1L));
    CHECK(z * z * z == Cyclotomic(-1L));
    Cyclotomic sum;
    for (int k = 0; k < 12; ++k) sum += Cyclotomic::root_of_unity(12, k);
    CHECK(sum.is_zero());
    CHECK(Cyclotomic::root_of_unity(4, 1).lifted(12) == Cyclotomic::root_of_unity(12, 3));
    CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1L));
  }

  TEST_CASE("galois_apply is a ring homomorphism and composes") {
    std::mt19937_64 rng(7);
    for (std::int64_t n = 1; n <= 60; ++n) {
      for (std::int64_t k = 1; k < std::max<std::int64_t>(n, 2); ++k) {
        if (std::gcd(k, n) != 1) continue;
        const auto x = random_element(rng, n), y = random_element(rng, n);
        CHECK((x + y).galois_apply(k) == x.galois_apply(k) + y.galois_apply(k));
        CHECK((x * y).galois_apply(k) == x.galois_apply(k) * y.galois_apply(k));
        const std::int64_t k2 = (n - 1 > 0) ? (n - 1) : 1;
        CHECK(x.galois_apply(k).galois_apply(k2) == x.galois_apply(k * k2 % n));
      }
    }
  }

  TEST_CASE("galois_apply rejects non-units") {
    CHECK_THROWS(Cyclotomic::root_of_unity(6, 1).galois_apply(2));
  }

  TEST_CASE("conjugation and norms") {
    const auto z = Cyclotomic::root_of_unity(5, 2);
    CHECK(z * z.conj() == Cyclotomic(1L));
    const auto a = Cyclotomic(2L) + Cyclotomic::root_of_unity(7, 3);
    CHECK_FALSE((a * a.conj()).to_rational().has_value());
    Cyclotomic norm(1L);
    for (std::int64_t k = 1; k < 7; ++k) norm *= a.galois_apply(k);
    CHECK(norm == Cyclotomic(43L));  // Phi_7(-2)
  }

  TEST_CASE("integer fast path matches exact reduction") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coef(-5, 5);
    for (std::int64_t n : {1, 2, 6, 12, 15, 30, 64, 105}) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(n));
      std::vector<std::pair<Rational, std::int64_t>> terms;
      for (std::int64_t k = 0; k < n; ++k) {
        v[k] = coef(rng);
        terms.emplace_back(Rational(v[k]), k);
      }
      const auto exact = Cyclotomic::from_terms(n, terms);
      const auto fast = reduce_integer_exponents(n, v);
      const auto form = integer_exponent_form(exact, n);
      REQUIRE(form.has_value());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == (*form)[i]);
    }
    CHECK_FALSE(integer_exponent_form(Cyclotomic(make_rational(1, 2)), 4).has_value());
  }

  TEST_CASE("json round trip") {
    std::mt19937_64 rng(3);
    for (std::int64_t n : {1, 3, 8, 21}) {
      const auto x = random_element(rng, n);
      CHECK(cyclotomic_from_json(to_json(x)) == x);
    }
    CHECK(cyclotomic_from_json(nlohmann::json(-3)) == Cyclotomic(-3L));
    CHECK(cyclotomic_from_json(nlohmann::json("5/4")) == Cyclotomic(make_rational(5, 4)));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("7") == Rational(7));
  }
}
