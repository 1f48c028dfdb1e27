#include "stickel/verify.hpp"

#include <functional>
#include <numeric>
#include <random>

#include "stickel/bounds.hpp"
#include "stickel/error.hpp"
#include "stickel/kernels.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"group", r.group}, {"passed", r.all_passed()}, {"checks", checks}};
}

std::vector<VirtualCharacter> random_virtual_characters(std::size_t rank, std::size_t count,
                                                        std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<VirtualCharacter> out(count);
  for (auto& phi : out) {
    phi.coeffs.resize(rank);
    for (auto& c : phi.coeffs) c = dist(rng);
  }
  return out;
}

std::vector<OmegaAction> standard_actions(std::int64_t e) {
  std::vector<OmegaAction> out{OmegaAction::full(e)};
  auto known = [&](const ResidueGroup& h) {
    for (const auto& a : out)
      if (a.H == h) return true;
    return false;
  };
  if (!known(ResidueGroup::trivial(e))) out.push_back(OmegaAction::trivial(e));
  const ResidueGroup units = ResidueGroup::full_units(e);
  for (auto u : units.elements()) {
    ResidueGroup h = ResidueGroup::generated(e, {u});
    if (!known(h)) out.push_back({e, std::move(h)});
  }
  return out;
}

namespace {

using Check = std::function<CheckResult()>;

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    return {name, false, std::string("error: ") + ex.what()};
  }
}

std::string count_detail(std::size_t bad, std::size_t total, const std::string& what) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " " + what;
}

}  // namespace

VerifyReport verify_group(std::shared_ptr<const GroupTable> g, const VerifyOptions& opt) {
  VerifyReport report;
  report.group = g->descriptor();
  const CharacterTable table = table_for_group(g);
  const std::int64_t n = g->order();
  const std::int64_t e = g->exponent();
  const ConjClassSet& cls = g->classes();
  const VirtualCharacter rho = regular_character(table);

  std::vector<std::pair<std::string, Check>> checks;

  checks.emplace_back("table_relations", [&] {
    validate_table(table);
    const bool cols = column_orthogonality_holds(table);
    return CheckResult{"", cols, cols ? "rows, columns, degrees and power maps consistent"
                                      : "column orthogonality fails"};
  });

  checks.emplace_back("regular_closed_form", [&] {
    const bool ok = theta_bar(table, rho) == theta_regular_closed_form(*g);
    return CheckResult{"", ok, ok ? "Theta(rho) matches (n/m)(m-1)/2 on every class" : "mismatch"};
  });

  checks.emplace_back("integrality_equivalence", [&] {
    const auto batch =
        random_virtual_characters(table.num_irreducibles(), opt.samples, opt.seed, opt.coeff_bound);
    const auto t = kernels::integrality_tally(table, batch);
    return CheckResult{"", t.disagreements == 0,
                       std::to_string(t.samples) + " samples, " + std::to_string(t.theta_integral) +
                           " integral, " + std::to_string(t.disagreements) + " disagreements"};
  });

  checks.emplace_back("regular_pairing", [&] {
    std::size_t bad = 0;
    for (Elem s = 0; s < g->order(); ++s) {
      const std::int64_t m = g->element_order(s);
      if (pairing_at(table, rho, s) != make_rational(Integer(n * (m - 1)), Integer(2 * m))) ++bad;
    }
    return CheckResult{"", bad == 0, count_detail(bad, g->order(), "elements")};
  });

  checks.emplace_back("regular_parity", [&] {
    const bool by_sylow = rho_in_AG(*g);
    const bool by_sign = rho_in_AG_by_sign(*g);
    const bool by_theta = theta_bar(table, rho).is_integral();
    VirtualCharacter twice = rho;
    for (auto& c : twice.coeffs) c *= 2;
    const bool twice_ok = theta_bar(table, twice).is_integral();
    const bool ok = by_sylow == by_sign && by_sign == by_theta && twice_ok;
    return CheckResult{"", ok,
                       std::string("sylow2 ") + std::string(to_string(sylow2_class(*g))) +
                           ", rho in A_G: " + (by_sylow ? "yes" : "no")};
  });

  checks.emplace_back("omega_equivariance", [&] {
    std::size_t bad = 0, total = 0;
    const ResidueGroup units = ResidueGroup::full_units(e);
    for (auto k : units.elements())
      for (std::size_t i = 0; i < table.num_irreducibles(); ++i) {
        ++total;
        if (!omega_equivariance_check(table, irreducible_character(table, i), e == 1 ? 1 : k)) ++bad;
      }
    return CheckResult{"", bad == 0, count_detail(bad, total, "(character, k) pairs")};
  });

  const std::vector<OmegaAction> actions = standard_actions(e);

  checks.emplace_back("stabilizer_agreement", [&] {
    std::size_t bad = 0, total = 0;
    for (const auto& a : actions)
      for (ClassId c = 0; c < cls.count(); ++c) {
        ++total;
        if (!(class_stabilizer(*g, a, cls.reps[c]) == field_of_class(*g, a, cls.reps[c]).fixer)) ++bad;
      }
    return CheckResult{"", bad == 0, count_detail(bad, total, "(H, class) pairs")};
  });

  checks.emplace_back("field_routes_agree", [&] {
    std::size_t bad = 0, total = 0;
    for (const auto& a : actions)
      for (ClassId c = 0; c < cls.count(); ++c) {
        ++total;
        if (!(e_field_of_class(*g, a, cls.reps[c]) == field_of_class(*g, a, cls.reps[c]))) ++bad;
      }
    return CheckResult{"", bad == 0, count_detail(bad, total, "(H, class) pairs")};
  });

  checks.emplace_back("orbit_degree", [&] {
    std::size_t bad = 0, total = 0;
    for (const auto& a : actions) {
      const auto orbits = omega_orbits(*g, a);
      const auto inverted = omega_orbits(*g, a, true);
      if (orbits != inverted) ++bad;
      std::size_t covered = 0;
      for (const auto& o : orbits) {
        covered += o.size();
        for (auto c : o)
          if (cls.rep_orders[c] != cls.rep_orders[o.front()]) ++bad;
      }
      if (covered != cls.count()) ++bad;
      for (ClassId c = 0; c < cls.count(); ++c) {
        ++total;
        if (!orbit_degree_check(*g, a, cls.reps[c])) ++bad;
      }
    }
    return CheckResult{"", bad == 0, count_detail(bad, total, "(H, class) pairs")};
  });

  checks.emplace_back("ag_index", [&] {
    const Integer index = AG_index(AG_basis(table));
    const auto ab = abelianization(*g);
    const std::int64_t ab_order =
        std::accumulate(ab.begin(), ab.end(), std::int64_t{1}, std::multiplies<>());
    const auto linear = std::count(table.degrees().begin(), table.degrees().end(), 1);
    const bool ok = index == ab_order && linear == ab_order;
    return CheckResult{"", ok,
                       "[R_G : A_G] = " + index.get_str() + ", |G^ab| = " + std::to_string(ab_order)};
  });

  checks.emplace_back("bound_assembly", [&] {
    bool ok = true;
    for (const auto& a : actions) {
      const BoundExpression b = steinitz_bound(*g, a);
      if (b.squared == rho_in_AG(*g)) ok = false;
      std::size_t covered = 1;
      for (const auto& f : b.factors) {
        covered += f.orbit_size;
        if (f.exponent <= 0 || f.field.degree != static_cast<std::int64_t>(f.orbit_size)) ok = false;
      }
      if (covered != cls.count()) ok = false;
      if (g->is_abelian() && !(merge_by_m(b).factors == abelian_bound(*g, a).factors)) ok = false;
    }
    return CheckResult{"", ok, std::to_string(actions.size()) + " actions"};
  });

  report.checks.resize(checks.size());
  const auto count = static_cast<std::int64_t>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    CheckResult r = guarded(checks[i].first, checks[i].second);
    r.name = checks[i].first;
    report.checks[i] = std::move(r);
  }
  return report;
}

}  // namespace stickel
