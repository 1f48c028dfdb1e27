#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stickel/cli.hpp"

using stickel::cli::Command;
using stickel::cli::run;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Command make(std::string sub, std::string group) {
  Command c;
  c.subcommand = std::move(sub);
  c.group_spec = std::move(group);
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound for metacyclic(7,3,2)") {
    const auto r = run(make("bound", "metacyclic:7,3,2"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.text == slurp(std::string(STICKEL_GOLDEN_DIR) + "/bound_metacyclic_7_3_2.json"));
    const auto& f = r.report.at("factors");
    REQUIRE(f.size() == 2);
    CHECK(f[0].at("m") == 3);
    CHECK(f[0].at("exponent") == 7);
    CHECK(f[0].at("field").at("degree") == 2);
    CHECK(f[0].at("field").at("fixer_gens").empty());
    CHECK(f[1].at("m") == 7);
    CHECK(f[1].at("exponent") == 9);
    CHECK(f[1].at("field").at("fixer_gens") == nlohmann::json::array({2}));
    CHECK(r.report.at("squared") == false);
  }

  TEST_CASE("theta of the regular character of C2") {
    auto c = make("theta", "abelian:2");
    const auto r = run(c);
    REQUIRE(r.exit_code == 0);
    CHECK(r.text == slurp(std::string(STICKEL_GOLDEN_DIR) + "/theta_c2_regular.json"));
    CHECK(r.report.at("integral") == false);
    c.format = "text";
    CHECK(run(c).text.find("not integral") != std::string::npos);
  }

  TEST_CASE("verify S3") {
    const auto r = run(make("verify", "perm:3:(1 2),(1 2 3)"));
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("passed") == true);
    CHECK(r.text == slurp(std::string(STICKEL_GOLDEN_DIR) + "/verify_s3.json"));
  }

  TEST_CASE("error reporting") {
    auto bad = run(make("group", "cyclic:5"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.report.at("error").at("code") == "invalid_group_spec");

    auto k = make("bound", "metacyclic:7,3,2");
    k.kappa_spec = "gens=3";
    auto km = run(k);
    CHECK(km.exit_code == 1);
    CHECK(km.report.at("error").at("code") == "kappa_mismatch");
    k.kappa_spec = "gens=7";
    CHECK(run(k).report.at("error").at("code") == "kappa_mismatch");

    auto ingest = make("ingest", "");
    ingest.table_path = std::string(STICKEL_TEST_DATA) + "/s3_perturbed.json";
    auto ir = run(ingest);
    CHECK(ir.exit_code == 1);
    CHECK(ir.report.at("error").at("code") == "table_validation");

    ingest.table_path = std::string(STICKEL_TEST_DATA) + "/missing.json";
    CHECK(run(ingest).report.at("error").at("code") == "io");

    CHECK(run(make("nonsense", "abelian:2")).exit_code == 2);
    auto fmt = make("group", "abelian:2");
    fmt.format = "xml";
    CHECK(run(fmt).exit_code == 2);
  }

  TEST_CASE("output is deterministic") {
    for (const char* sub : {"group", "theta", "ag", "sg", "bound", "verify"}) {
      CAPTURE(sub);
      const auto a = run(make(sub, "metacyclic:5,2,4"));
      const auto b = run(make(sub, "metacyclic:5,2,4"));
      CHECK(a.exit_code == 0);
      CHECK(a.text == b.text);
    }
  }

  TEST_CASE("ingest binds to a group") {
    auto c = make("ingest", "abelian:3");
    c.table_path = std::string(STICKEL_TEST_DATA) + "/c3.json";
    const auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("valid") == true);
  }
}
