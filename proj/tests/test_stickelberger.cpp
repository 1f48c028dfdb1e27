#include <numeric>

#include "doctest.h"
#include "groups.hpp"
#include "stickel/kernels.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

Rational half_regular(std::int64_t n, std::int64_t m) {
  return make_rational(Integer(n * (m - 1)), Integer(2 * m));
}

// Lattice spanned by every integral Theta_G(phi) with coefficients in a box.
IntMatrix enumerated_stickelberger(const CharacterTable& t, int bound) {
  const std::size_t r = t.num_irreducibles();
  IntMatrix rows;
  std::vector<std::int64_t> c(r, -bound);
  while (true) {
    const GroupRingElt th = theta(t, VirtualCharacter{c});
    if (th.is_integral()) {
      std::vector<Integer> row;
      for (const auto& x : th.coeffs) row.push_back(x.get_num());
      rows.append_row(row);
    }
    std::size_t i = 0;
    while (i < r && c[i] == bound) c[i++] = -bound;
    if (i == r) break;
    ++c[i];
  }
  return nonzero_rows(hermite_normal_form(rows));
}

}  // namespace

TEST_SUITE("stickelberger") {
  TEST_CASE("regular character: class-sum form equals the closed form") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      CAPTURE(spec);
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      CHECK(theta_bar(t, regular_character(t)) == theta_regular_closed_form(*g));
    }
  }

  TEST_CASE("pairing with the regular character at every element") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      const VirtualCharacter rho = regular_character(t);
      for (Elem s = 0; s < g->order(); ++s)
        CHECK(pairing_at(t, rho, s) == half_regular(g->order(), g->element_order(s)));
    }
  }

  TEST_CASE("C2: Theta of the regular character is s/2") {
    const CharacterTable t = table_for_group(testgroups::make("abelian:2"));
    const GroupRingElt th = theta(t, regular_character(t));
    CHECK(th.coeffs == std::vector<Rational>{0, make_rational(1, 2)});
    CHECK_FALSE(th.is_integral());
  }

  TEST_CASE("element and class forms agree") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      for (const auto& phi : random_virtual_characters(t.num_irreducibles(), 10, 21))
        CHECK(theta(t, phi) == iota(*g, theta_bar(t, phi)));
    }
  }

  TEST_CASE("integrality equivalence on random virtual characters") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      CAPTURE(spec);
      const CharacterTable t = table_for_group(testgroups::make(spec));
      const auto batch = random_virtual_characters(t.num_irreducibles(), 200, 1234);
      const auto tally = kernels::integrality_tally(t, batch);
      CHECK(tally.samples == 200);
      CHECK(tally.disagreements == 0);
      CHECK(tally == kernels::integrality_tally_serial(t, batch));
      const auto basis = AG_basis(t);
      for (const auto& phi : batch)
        CHECK(in_AG_lattice(basis, phi) == det_is_trivial(det_character(t, phi)));
    }
  }

  TEST_CASE("rho in A_G: three criteria agree and 2 rho always integral") {
    for (const std::string spec :
         {"abelian:2", "abelian:4", "abelian:2,2", "abelian:6", "abelian:15", "abelian:2,4",
          "perm:3:(1 2),(1 2 3)", "perm:4:(1 2 3 4),(1 3)", "metacyclic:8,2,3", "metacyclic:7,3,2"}) {
      CAPTURE(spec);
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      const VirtualCharacter rho = regular_character(t);
      CHECK(rho_in_AG(*g) == rho_in_AG_by_sign(*g));
      CHECK(rho_in_AG(*g) == theta_bar(t, rho).is_integral());
      CHECK(rho_in_AG(*g) == in_AG(t, rho));
      VirtualCharacter twice = rho;
      for (auto& c : twice.coeffs) c *= 2;
      CHECK(theta_bar(t, twice).is_integral());
    }
  }

  TEST_CASE("Galois equivariance for irreducibles") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const CharacterTable t = table_for_group(testgroups::make(spec));
      const std::int64_t e = t.exponent();
      for (std::int64_t k = 1; k <= e; ++k) {
        if (std::gcd(k, e) != 1) continue;
        for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
          CHECK(omega_equivariance_check(t, irreducible_character(t, i), k));
      }
      if (e > 2) CHECK_THROWS(omega_equivariance_check(t, trivial_character(t), e));
    }
  }

  TEST_CASE("A_G index equals |G^ab|") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      CAPTURE(spec);
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      const auto ab = abelianization(*g);
      const std::int64_t order = std::accumulate(ab.begin(), ab.end(), std::int64_t{1}, std::multiplies<>());
      const auto basis = AG_basis(t);
      CHECK(AG_index(basis) == order);
      for (const auto& phi : basis) CHECK(det_is_trivial(det_character(t, phi)));
    }
  }

  TEST_CASE("S_G of C2 and S3 matches exhaustive enumeration") {
    for (const std::string spec : {"abelian:2", "perm:3:(1 2),(1 2 3)", "abelian:3"}) {
      CAPTURE(spec);
      const CharacterTable t = table_for_group(testgroups::make(spec));
      CHECK(nonzero_rows(stickelberger_module(t)) == enumerated_stickelberger(t, 3));
    }
    const CharacterTable c2 = table_for_group(testgroups::make("abelian:2"));
    CHECK(nonzero_rows(stickelberger_module(c2)) == IntMatrix{{0, 1}});
  }

  TEST_CASE("class-coordinate module is the image of the element module") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      const IntMatrix cls = nonzero_rows(stickelberger_module_classes(t));
      const IntMatrix elt = nonzero_rows(stickelberger_module(t));
      CHECK(cls.rows() == elt.rows());
      IntMatrix spread;
      for (std::size_t i = 0; i < cls.rows(); ++i) {
        std::vector<Integer> row;
        for (Elem x = 0; x < g->order(); ++x) row.push_back(cls(i, g->class_of(x)));
        spread.append_row(row);
      }
      CHECK(nonzero_rows(hermite_normal_form(spread)) == elt);
    }
  }
}
