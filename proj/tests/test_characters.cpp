#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "groups.hpp"
#include "stickel/characters.hpp"
#include "stickel/error.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

std::string data(const std::string& name) { return std::string(STICKEL_TEST_DATA) + "/" + name; }

std::string validation_message(const std::string& file) {
  try {
    ingest_table_file(data(file));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TableValidation);
    return e.what();
  }
  FAIL("table was accepted: " << file);
  return {};
}

// Row orthogonality written out in plain cyclotomic arithmetic.
bool rows_orthonormal(const CharacterTable& t) {
  for (std::size_t a = 0; a < t.num_irreducibles(); ++a)
    for (std::size_t b = 0; b < t.num_irreducibles(); ++b) {
      Cyclotomic acc;
      for (ClassId c = 0; c < t.num_classes(); ++c)
        acc += t.irreducible(a)[c] * t.irreducible(b)[c].conj() * Rational(t.classes().sizes[c]);
      if (!(acc == Cyclotomic(Rational(a == b ? t.order() : 0)))) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("tables of the acceptance groups satisfy the character relations") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      CAPTURE(spec);
      const CharacterTable t = table_for_group(testgroups::make(spec));
      CHECK(t.num_irreducibles() == t.num_classes());
      CHECK(rows_orthonormal(t));
      CHECK(column_orthogonality_holds(t));
      std::int64_t sq = 0;
      for (auto d : t.degrees()) sq += d * d;
      CHECK(sq == t.order());
      for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
        for (const auto& v : t.irreducible(i)) CHECK(t.exponent() % v.conductor() == 0);
      CHECK_NOTHROW(validate_table(t));
    }
  }

  TEST_CASE("abelian tables") {
    const CharacterTable c2 = table_for_group(testgroups::make("abelian:2"));
    CHECK(c2.irreducible(0) == std::vector<Cyclotomic>{1L, 1L});
    CHECK(c2.irreducible(1) == std::vector<Cyclotomic>{1L, -1L});
    const CharacterTable v4 = table_for_group(testgroups::make("abelian:2,2"));
    for (const auto& row : v4.irreducibles())
      for (const auto& v : row) CHECK((v == Cyclotomic(1L) || v == Cyclotomic(-1L)));
    const CharacterTable c3 = table_for_group(testgroups::make("abelian:3"));
    CHECK(c3.irreducible(1)[1] == Cyclotomic::root_of_unity(3, 1));
    CHECK_THROWS_AS(abelian_table(testgroups::make("perm:3:(1 2),(1 2 3)")), Error);
  }

  TEST_CASE("metacyclic tables") {
    const CharacterTable t = metacyclic_table(testgroups::make("metacyclic:7,3,2"));
    std::vector<std::int64_t> deg = t.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<std::int64_t>{1, 1, 1, 3, 3});
    const CharacterTable d5 = metacyclic_table(testgroups::make("metacyclic:5,2,4"));
    deg = d5.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<std::int64_t>{1, 1, 2, 2});
    // prime-power case with stabilizers between 1 and q
    const CharacterTable g = metacyclic_table(testgroups::make("metacyclic:9,3,4"));
    CHECK(rows_orthonormal(g));
    CHECK(g.num_irreducibles() == g.num_classes());
  }

  TEST_CASE("metacyclic D4 matches the bound built-in table up to row order") {
    const auto g = testgroups::make("metacyclic:4,2,3");
    const CharacterTable closed = metacyclic_table(g);
    const CharacterTable bound = bind_table(ingest_table(builtin_table_documents()[1]), g);
    auto rows = [](const CharacterTable& t) {
      std::vector<std::string> out;
      for (const auto& row : t.irreducibles()) {
        std::string s;
        for (const auto& v : row) s += v.to_string() + ";";
        out.push_back(s);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(rows(closed) == rows(bound));
  }

  TEST_CASE("ingestion") {
    const CharacterTable s3 = ingest_table_file(data("s3.json"));
    CHECK(s3.order() == 6);
    CHECK(s3.degrees() == std::vector<std::int64_t>{1, 1, 2});
    CHECK(validation_message("s3_perturbed.json").find("row orthogonality") != std::string::npos);
    CHECK(validation_message("s3_no_power_map.json").find("power map required") != std::string::npos);
    const CharacterTable c3 = ingest_table_file(data("c3.json"));
    CHECK(c3.exponent() == 3);
    try {
      ingest_table_file(data("missing.json"));
      FAIL("missing file accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Io);
    }
  }

  TEST_CASE("ingested table round trips through json") {
    const CharacterTable s3 = ingest_table_file(data("s3.json"));
    const CharacterTable again = ingest_table(table_to_json(s3));
    CHECK(again.irreducibles() == s3.irreducibles());
  }

  TEST_CASE("binding an ingested table to a group") {
    const auto g = testgroups::make("perm:3:(1 2),(1 2 3)");
    const CharacterTable t = bind_table(ingest_table_file(data("s3.json")), g);
    CHECK(t.group() == g.get());
    for (ClassId c = 0; c < t.num_classes(); ++c)
      CHECK(t.classes().rep_orders[c] == g->element_order(t.classes().reps[c]));
    CHECK_THROWS_AS(bind_table(ingest_table_file(data("s3.json")), testgroups::make("abelian:6")), Error);
  }

  TEST_CASE("regular and trivial characters") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const CharacterTable t = table_for_group(testgroups::make(spec));
      const VirtualCharacter rho = regular_character(t);
      CHECK(rho.coeffs == t.degrees());
      for (ClassId c = 0; c < t.num_classes(); ++c) {
        CHECK(value(t, rho, c) == Cyclotomic(c == t.identity_class() ? t.order() : 0L));
        CHECK(value(t, trivial_character(t), c) == Cyclotomic(1L));
      }
    }
    const CharacterTable s3 = ingest_table_file(data("s3.json"));
    CHECK(regular_character(s3).coeffs == std::vector<std::int64_t>{1, 1, 2});
    const CharacterTable one = table_for_group(testgroups::make("abelian:"));
    CHECK(regular_character(one).coeffs == std::vector<std::int64_t>{1});
  }

  TEST_CASE("restriction multiplicities") {
    const CharacterTable s3 = ingest_table_file(data("s3.json"));
    CHECK(restrict_multiplicities_at_class(s3, irreducible_character(s3, 2), 2) ==
          std::vector<std::int64_t>{0, 1, 1});
    CHECK(restrict_multiplicities_at_class(s3, trivial_character(s3), 1) ==
          std::vector<std::int64_t>{1, 0});
    for (const auto& spec : testgroups::acceptance_specs()) {
      const auto g = testgroups::make(spec);
      const CharacterTable t = table_for_group(g);
      for (Elem s = 0; s < g->order(); ++s) {
        const std::int64_t m = g->element_order(s);
        CHECK(restrict_multiplicities(t, regular_character(t), s) ==
              std::vector<std::int64_t>(static_cast<std::size_t>(m), g->order() / m));
      }
      for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
        for (ClassId c = 0; c < t.num_classes(); ++c) {
          const auto& mult = t.irreducible_multiplicities(i, c);
          std::int64_t sum = 0;
          for (auto x : mult) {
            CHECK(x >= 0);
            sum += x;
          }
          CHECK(sum == t.degrees()[i]);
          CHECK(mult == restrict_multiplicities_at_class(t, irreducible_character(t, i), c));
        }
    }
  }

  TEST_CASE("multiplicity kernel agrees with its serial reference") {
    for (const std::string spec : {"metacyclic:7,3,2", "abelian:4,12", "perm:4:(1 2),(1 2 3 4)",
                                   "metacyclic:16,4,3"}) {
      const CharacterTable t = table_for_group(testgroups::make(spec));
      CHECK(kernels::irreducible_multiplicities(t.classes(), t.irreducibles()) ==
            kernels::irreducible_multiplicities_serial(t.classes(), t.irreducibles()));
    }
  }

  TEST_CASE("decompose inverts values") {
    for (const auto& spec : testgroups::acceptance_specs()) {
      const CharacterTable t = table_for_group(testgroups::make(spec));
      for (const auto& phi : random_virtual_characters(t.num_irreducibles(), 20, 5))
        CHECK(decompose(t, values(t, phi)) == phi);
    }
  }

  TEST_CASE("built-in tables validate and bind to their permutation groups") {
    const std::vector<std::string> specs{"perm:3:(1 2),(1 2 3)", "perm:4:(1 2 3 4),(1 3)",
                                         "perm:8:(1 2 4 8)(3 6 7 5),(1 3 4 7)(2 5 8 6)",
                                         "perm:4:(1 2)(3 4),(1 2 3)", "perm:4:(1 2),(1 2 3 4)"};
    for (std::size_t i = 0; i < specs.size(); ++i) {
      CAPTURE(specs[i]);
      const CharacterTable standalone = ingest_table(builtin_table_documents()[i]);
      const CharacterTable t = bind_table(standalone, testgroups::make(specs[i]));
      CHECK(rows_orthonormal(t));
    }
  }
}
