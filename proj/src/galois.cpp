#include "stickel/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stickel/error.hpp"

namespace stickel {

namespace {

void require_exponent(const GroupTable& g, const OmegaAction& a) {
  if (a.e != g.exponent())
    throw Error(ErrorCode::KappaMismatch, "kappa is declared mod " + std::to_string(a.e) +
                                              " but the group exponent is " +
                                              std::to_string(g.exponent()));
}

std::int64_t inverse_mod(std::int64_t h, std::int64_t e) {
  if (e == 1) return 0;
  for (std::int64_t x = 1; x < e; ++x)
    if (h * x % e == 1) return x;
  throw Error(ErrorCode::KappaMismatch, std::to_string(h) + " is not a unit mod " + std::to_string(e));
}

FieldDescriptor make_descriptor(std::int64_t m, ResidueGroup h_m, ResidueGroup fixer) {
  FieldDescriptor f;
  f.m = m;
  f.degree = static_cast<std::int64_t>(h_m.size() / fixer.size());
  f.H_m = std::move(h_m);
  f.fixer = std::move(fixer);
  return f;
}

}  // namespace

OmegaAction OmegaAction::full(std::int64_t e) { return {e, ResidueGroup::full_units(e)}; }

OmegaAction OmegaAction::trivial(std::int64_t e) { return {e, ResidueGroup::trivial(e)}; }

OmegaAction OmegaAction::parse(const std::string& spec, std::int64_t e) {
  if (spec == "full") return full(e);
  if (spec == "trivial") return trivial(e);
  if (spec.rfind("gens=", 0) != 0)
    throw Error(ErrorCode::InvalidArgument, "kappa must be full, trivial or gens=a,b,...: " + spec);
  std::vector<std::int64_t> gens;
  std::stringstream in(spec.substr(5));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      gens.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad kappa generator '" + tok + "'");
    }
  }
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "gens= needs at least one generator");
  for (auto x : gens)
    if (e > 1 && std::gcd(((x % e) + e) % e, e) != 1)
      throw Error(ErrorCode::KappaMismatch, "kappa generator " + std::to_string(x) +
                                                " is not coprime to the exponent " +
                                                std::to_string(e));
  return {e, ResidueGroup::generated(e, gens)};
}

nlohmann::json to_json(const FieldDescriptor& f) {
  return {{"m", f.m}, {"fixer_gens", f.fixer.generators()}, {"degree", f.degree}};
}

std::vector<Orbit> omega_orbits(const GroupTable& g, const OmegaAction& a,
                                bool inverse_convention) {
  require_exponent(g, a);
  const ConjClassSet& cls = g.classes();
  std::vector<char> seen(cls.count(), 0);
  std::vector<Orbit> orbits;
  for (ClassId c = 0; c < cls.count(); ++c) {
    if (seen[c]) continue;
    Orbit orbit;
    for (auto h : a.H.elements()) {
      const std::int64_t k = inverse_convention ? inverse_mod(h, a.e) : h;
      orbit.push_back(power_class(cls, c, k));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto d : orbit) seen[d] = 1;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

ResidueGroup class_stabilizer(const GroupTable& g, const OmegaAction& a, Elem s) {
  require_exponent(g, a);
  const std::int64_t m = g.element_order(s);
  const ResidueGroup h_m = a.H.image_mod(m);
  std::vector<std::int64_t> stab;
  for (auto h : h_m.elements())
    if (g.class_of(g.pow(s, h)) == g.class_of(s)) stab.push_back(h);
  return ResidueGroup::from_elements(m, std::move(stab));
}

FieldDescriptor field_of_class(const GroupTable& g, const OmegaAction& a, Elem s) {
  require_exponent(g, a);
  const std::int64_t m = g.element_order(s);
  ResidueGroup h_m = a.H.image_mod(m);
  ResidueGroup fixer = h_m.intersect(normalizer_mu(g, s));
  return make_descriptor(m, std::move(h_m), std::move(fixer));
}

FieldDescriptor e_field_of_class(const GroupTable& g, const OmegaAction& a, Elem s) {
  require_exponent(g, a);
  const std::int64_t m = g.element_order(s);
  std::vector<char> in_cyclic(g.order(), 0);
  std::vector<std::int64_t> log(g.order(), -1);
  Elem y = g.identity();
  for (std::int64_t k = 0; k < m; ++k) {
    in_cyclic[y] = 1;
    log[y] = k;
    y = g.mul(y, s);
  }
  std::vector<char> mu(static_cast<std::size_t>(m), 0);
  for (Elem t = 0; t < g.order(); ++t) {
    const Elem ti = g.inv(t);
    bool normalizes = true;
    for (Elem x = 0; x < g.order() && normalizes; ++x)
      if (in_cyclic[x] && !in_cyclic[g.mul(g.mul(t, x), ti)]) normalizes = false;
    if (normalizes) mu[log[g.mul(g.mul(t, s), ti)]] = 1;
  }
  std::vector<std::int64_t> fixer;
  for (auto h : a.H.elements())
    if (mu[h % m]) fixer.push_back(h % m);
  return make_descriptor(m, a.H.image_mod(m), ResidueGroup::from_elements(m, std::move(fixer)));
}

bool orbit_degree_check(const GroupTable& g, const OmegaAction& a, Elem s) {
  const ClassId c = g.class_of(s);
  for (const auto& orbit : omega_orbits(g, a))
    if (std::binary_search(orbit.begin(), orbit.end(), c))
      return static_cast<std::int64_t>(orbit.size()) == field_of_class(g, a, s).degree;
  return false;
}

}  // namespace stickel
