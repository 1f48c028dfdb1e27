#include <numeric>

#include "doctest.h"
#include "groups.hpp"
#include "stickel/bounds.hpp"
#include "stickel/error.hpp"
#include "stickel/kernels.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

std::string abelian_spec(const std::vector<std::int64_t>& inv) {
  std::string s = "abelian:";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "," : "") + std::to_string(inv[i]);
  return s;
}

// gcd of (p-1) over primes by trial division on every candidate.
std::int64_t c_reference(std::int64_t e) {
  std::int64_t g = 0;
  for (std::int64_t p = 2; p <= e; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime && e % p == 0) g = std::gcd(g, p - 1);
  }
  return g;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("metacyclic(7,3,2) under full kappa") {
    const GroupTable g = parse_group_spec("metacyclic:7,3,2");
    const BoundExpression b = steinitz_bound(g, OmegaAction::full(21));
    CHECK_FALSE(b.squared);
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].m == 3);
    CHECK(b.factors[0].field.degree == 2);
    CHECK(b.factors[0].exponent == 7);
    CHECK(b.factors[1].m == 7);
    CHECK(b.factors[1].field.degree == 2);
    CHECK(b.factors[1].exponent == 9);
    // p(q-1)/2 and q(p-1)/2 with p = 7, q = 3
    CHECK(b.factors[0].exponent == 7 * (3 - 1) / 2);
    CHECK(b.factors[1].exponent == 3 * (7 - 1) / 2);
  }

  TEST_CASE("small cases") {
    const BoundExpression c2 = steinitz_bound(parse_group_spec("abelian:2"), OmegaAction::trivial(2));
    CHECK(c2.squared);
    REQUIRE(c2.factors.size() == 1);
    CHECK(c2.factors[0].m == 2);
    CHECK(c2.factors[0].exponent == 1);
    CHECK(steinitz_bound(parse_group_spec("abelian:"), OmegaAction::full(1)).factors.empty());

    const BoundExpression v4 = abelian_bound(parse_group_spec("abelian:2,2"), OmegaAction::full(2));
    CHECK_FALSE(v4.squared);
    REQUIRE(v4.factors.size() == 1);
    CHECK(v4.factors[0].exponent == 1);

    const BoundExpression c6 = abelian_bound(parse_group_spec("abelian:6"), OmegaAction::full(6));
    CHECK(c6.squared);
    REQUIRE(c6.factors.size() == 3);
    CHECK(c6.factors[0].m == 2);
    CHECK(c6.factors[0].exponent == 3);
    CHECK(c6.factors[1].m == 3);
    CHECK(c6.factors[1].exponent == 4);
    CHECK(c6.factors[2].m == 6);
    CHECK(c6.factors[2].exponent == 5);

    const BoundExpression c3 = abelian_bound(parse_group_spec("abelian:3"), OmegaAction::full(3));
    CHECK_FALSE(c3.squared);
    REQUIRE(c3.factors.size() == 1);
    CHECK(c3.factors[0].exponent == 1);

    CHECK_THROWS_AS(abelian_bound(parse_group_spec("perm:3:(1 2),(1 2 3)"), OmegaAction::full(6)), Error);
  }

  TEST_CASE("assembled bounds are well formed") {
    std::vector<std::string> specs = testgroups::acceptance_specs();
    specs.push_back("metacyclic:9,3,4");
    specs.push_back("perm:4:(1 2),(1 2 3 4)");
    for (const auto& spec : specs) {
      CAPTURE(spec);
      const GroupTable g = parse_group_spec(spec);
      for (const auto& a : standard_actions(g.exponent())) {
        const BoundExpression b = steinitz_bound(g, a);
        CHECK(b.squared == !rho_in_AG(g));
        std::size_t covered = 1;
        for (const auto& f : b.factors) {
          CHECK(f.exponent > 0);
          CHECK(f.field.m == f.m);
          const std::int64_t twice = (g.order() / f.m) * (f.m - 1);
          CHECK(f.exponent == (b.squared ? twice : twice / 2));
          if (!b.squared) CHECK(twice % 2 == 0);
          CHECK(static_cast<std::int64_t>(f.orbit_size) == f.field.degree);
          covered += f.orbit_size;
        }
        CHECK(covered == g.classes().count());
        for (std::size_t i = 1; i < b.factors.size(); ++i)
          CHECK((b.factors[i - 1].m < b.factors[i].m ||
                 (b.factors[i - 1].m == b.factors[i].m &&
                  b.factors[i - 1].orbit_rep < b.factors[i].orbit_rep)));
      }
    }
  }

  TEST_CASE("abelian bound equals the merged assembled bound") {
    for (std::int64_t n = 1; n <= 48; ++n)
      for (const auto& inv : abelian_groups_of_order(n)) {
        const GroupTable g = parse_group_spec(abelian_spec(inv));
        for (const auto& a : standard_actions(g.exponent())) {
          CAPTURE(abelian_spec(inv));
          CHECK(merge_by_m(steinitz_bound(g, a)).factors == abelian_bound(g, a).factors);
        }
      }
  }

  TEST_CASE("flattened and nested exponents agree") {
    for (std::int64_t n = 1; n <= 100; ++n)
      for (const auto& inv : abelian_groups_of_order(n)) {
        const std::int64_t e = inv.empty() ? 1 : inv.back();
        for (std::int64_t m = 2; m <= e; ++m)
          if (e % m == 0) CHECK((n / e) * ((e / m) * (m - 1)) == (n / m) * (m - 1));
      }
  }

  TEST_CASE("c and d") {
    CHECK(c_of(1) == 0);
    CHECK(c_of(6) == 1);
    CHECK(c_of(15) == 2);
    CHECK(d_of(15) == 1);
    CHECK(c_of(7) == 6);
    CHECK(d_of(12) == 1);
    for (std::int64_t e = 1; e <= 500; ++e) {
      CHECK(c_of(e) == c_reference(e));
      if (e % 2 == 1) CHECK(c_of(e) == 2 * d_of(e));
      else CHECK(c_of(e) == d_of(e));
    }
  }

  TEST_CASE("gcd claim") {
    CHECK(divisor_gcd(12) == 1);
    CHECK(divisor_gcd(15) == 2);
    for (std::int64_t p : {2, 3, 5, 7, 11, 101}) CHECK(divisor_gcd(p) == p - 1);
    const auto failures = kernels::gcd_claim_failures(2, 10000);
    CHECK(failures.empty());
    CHECK(failures == kernels::gcd_claim_failures_serial(2, 10000));
  }

  TEST_CASE("Kummer exponent: closed form and assembled bound agree") {
    for (std::int64_t n = 1; n <= 64; ++n)
      for (const auto& inv : abelian_groups_of_order(n)) {
        CAPTURE(abelian_spec(inv));
        const GroupTable g = parse_group_spec(abelian_spec(inv));
        CHECK(kummer_bound_exponent(g) == kummer_exponent_from_bound(g));
      }
    CHECK(kummer_bound_exponent(std::vector<std::int64_t>{15}).exponent == 1);  // (n/e) d(e)
    CHECK(kummer_bound_exponent(std::vector<std::int64_t>{2, 4}).exponent == 1);  // n/(2e)
    CHECK(kummer_bound_exponent(std::vector<std::int64_t>{6}).exponent == 1);  // n/e
    CHECK(kummer_bound_exponent(std::vector<std::int64_t>{3, 6}).exponent == 3);
  }

  TEST_CASE("comparison with Long") {
    auto cmp = [](std::vector<std::int64_t> inv) { return compare_with_long(inv); };
    CHECK(cmp({2, 2}).tight);
    CHECK(cmp({2, 2}).long_exponent == 1);
    CHECK(cmp({2, 4}).contains);
    CHECK_FALSE(cmp({2, 4}).tight);
    CHECK(cmp({2, 4}).bound_exponent == 1);
    CHECK(cmp({2, 4}).long_exponent == 2);
    CHECK(cmp({9}).tight);
    CHECK(cmp({9}).long_exponent == 1);  // d(9) = 1
    CHECK(cmp({7}).tight);
    CHECK(cmp({7}).long_exponent == 3);
    CHECK(cmp({15}).long_exponent == 1);
    CHECK_THROWS_AS(compare_with_long(parse_group_spec("perm:3:(1 2),(1 2 3)")), Error);
  }

  TEST_CASE("abelian groups by invariant factors") {
    const std::vector<std::size_t> counts{1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5};
    for (std::int64_t n = 1; n <= 16; ++n) CHECK(abelian_groups_of_order(n).size() == counts[n - 1]);
    CHECK(abelian_groups_of_order(64).size() == 11);
    CHECK(abelian_groups_of_order(72).size() == 6);
    CHECK(abelian_groups_of_order(96).size() == 7);
    for (const auto& inv : abelian_groups_of_order(72)) {
      const GroupTable g = parse_group_spec(abelian_spec(inv));
      CHECK(abelian_invariants(g) == inv);
    }
  }

  TEST_CASE("json shape") {
    const BoundExpression b = steinitz_bound(parse_group_spec("metacyclic:7,3,2"), OmegaAction::full(21));
    const auto j = to_json(b);
    CHECK(j.at("group") == "metacyclic:7,3,2");
    CHECK(j.at("squared") == false);
    CHECK(j.at("factors").size() == 2);
    CHECK(j.at("factors")[0].at("field").at("degree") == 2);
  }
}
