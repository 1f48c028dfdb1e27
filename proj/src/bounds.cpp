#include "stickel/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "stickel/error.hpp"

namespace stickel {

namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t e) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= e; ++p) {
    if (e % p != 0) continue;
    ps.push_back(p);
    while (e % p == 0) e /= p;
  }
  if (e > 1) ps.push_back(e);
  return ps;
}

std::int64_t factor_exponent(std::int64_t n, std::int64_t m, bool squared) {
  const std::int64_t twice = (n / m) * (m - 1);
  if (squared) return twice;
  if (twice % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "unsquared exponent (n/m)(m-1)/2 is not integral for m = " +
                                                std::to_string(m));
  return twice / 2;
}

void require_abelian(const GroupTable& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "group " + g.descriptor() + " is not abelian");
}

void sort_factors(std::vector<BoundFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const BoundFactor& a, const BoundFactor& b) {
    return a.m != b.m ? a.m < b.m : a.orbit_rep < b.orbit_rep;
  });
}

struct TwoPart {
  std::size_t nontrivial = 0;  // number of invariant factors with even order
  std::size_t top_multiplicity = 0;
};

TwoPart two_part(const std::vector<std::int64_t>& invariants) {
  std::vector<std::int64_t> parts;
  for (auto d : invariants) {
    std::int64_t p = 1;
    while (d % 2 == 0) {
      d /= 2;
      p *= 2;
    }
    if (p > 1) parts.push_back(p);
  }
  TwoPart t;
  t.nontrivial = parts.size();
  if (!parts.empty()) {
    const auto top = *std::max_element(parts.begin(), parts.end());
    t.top_multiplicity = static_cast<std::size_t>(std::count(parts.begin(), parts.end(), top));
  }
  return t;
}

std::int64_t product(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{1}, std::multiplies<>());
}

std::int64_t top_invariant(const std::vector<std::int64_t>& v) {
  return v.empty() ? 1 : *std::max_element(v.begin(), v.end());
}

void check_invariants(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    if (i > 0 && v[i] % v[i - 1] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisor chain");
  }
}

}  // namespace

nlohmann::json to_json(const BoundExpression& b) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : b.factors)
    factors.push_back({{"orbit_rep", f.orbit_rep},
                       {"orbit_size", f.orbit_size},
                       {"m", f.m},
                       {"field", to_json(f.field)},
                       {"exponent", f.exponent}});
  return {{"group", b.group}, {"kappa", b.kappa}, {"squared", b.squared}, {"factors", factors}};
}

BoundExpression steinitz_bound(const GroupTable& g, const OmegaAction& a) {
  BoundExpression b;
  b.group = g.descriptor();
  b.kappa = a.H.generators();
  b.squared = sylow2_class(g) == Sylow2Class::CyclicNontrivial;
  const ConjClassSet& cls = g.classes();
  const std::int64_t n = g.order();
  for (const auto& orbit : omega_orbits(g, a)) {
    const ClassId rep = orbit.front();
    if (rep == cls.identity_class()) continue;
    const Elem s = cls.reps[rep];
    BoundFactor f;
    f.orbit_rep = rep;
    f.m = g.element_order(s);
    f.field = field_of_class(g, a, s);
    f.exponent = factor_exponent(n, f.m, b.squared);
    f.orbit_size = orbit.size();
    b.factors.push_back(std::move(f));
  }
  sort_factors(b.factors);
  return b;
}

BoundExpression abelian_bound(const GroupTable& g, const OmegaAction& a) {
  require_abelian(g);
  if (a.e != g.exponent())
    throw Error(ErrorCode::KappaMismatch, "kappa modulus does not match the group exponent");
  BoundExpression b;
  b.group = g.descriptor();
  b.kappa = a.H.generators();
  b.squared = sylow2_class(g) == Sylow2Class::CyclicNontrivial;
  const std::int64_t n = g.order();
  const std::int64_t e = g.exponent();
  for (std::int64_t m = 2; m <= e; ++m) {
    if (e % m != 0) continue;
    BoundFactor f;
    f.m = m;
    f.orbit_size = 0;
    bool found = false;
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.element_order(x) != m) continue;
      if (!found) f.orbit_rep = g.class_of(x);
      found = true;
      ++f.orbit_size;
    }
    if (!found)
      throw Error(ErrorCode::InvalidArgument, "abelian group has no element of order " + std::to_string(m));
    f.field.m = m;
    f.field.H_m = a.H.image_mod(m);
    f.field.fixer = ResidueGroup::trivial(m);
    f.field.degree = static_cast<std::int64_t>(f.field.H_m.size());
    f.exponent = factor_exponent(n, m, b.squared);
    b.factors.push_back(std::move(f));
  }
  sort_factors(b.factors);
  return b;
}

BoundExpression merge_by_m(const BoundExpression& b) {
  BoundExpression out = b;
  out.factors.clear();
  for (const auto& f : b.factors) {
    if (!out.factors.empty() && out.factors.back().m == f.m) {
      out.factors.back().orbit_size += f.orbit_size;
      continue;
    }
    out.factors.push_back(f);
  }
  return out;
}

std::int64_t c_of(std::int64_t e) {
  std::int64_t c = 0;
  for (auto p : prime_divisors(e)) c = std::gcd(c, p - 1);
  return c;
}

std::int64_t d_of(std::int64_t e) {
  if (e % 2 == 0) return 1;
  std::int64_t d = 0;
  for (auto p : prime_divisors(e)) d = std::gcd(d, (p - 1) / 2);
  return d;
}

std::int64_t divisor_gcd(std::int64_t e) {
  std::int64_t g = 0;
  for (std::int64_t m = 2; m <= e; ++m)
    if (e % m == 0) g = std::gcd(g, (e / m) * (m - 1));
  return g;
}

bool gcd_claim(std::int64_t e) { return divisor_gcd(e) == c_of(e); }

KummerExponent kummer_bound_exponent(const std::vector<std::int64_t>& invariants) {
  check_invariants(invariants);
  const std::int64_t n = product(invariants);
  const std::int64_t e = top_invariant(invariants);
  const TwoPart t = two_part(invariants);
  if (t.nontrivial == 1) return {n / e, false};
  return {(n / e) * c_of(e) / 2, false};
}

KummerExponent kummer_bound_exponent(const GroupTable& g) {
  return kummer_bound_exponent(abelian_invariants(g));
}

KummerExponent kummer_exponent_from_bound(const GroupTable& g) {
  require_abelian(g);
  const BoundExpression b = steinitz_bound(g, OmegaAction::trivial(g.exponent()));
  std::int64_t x = 0;
  for (const auto& f : b.factors) x = std::gcd(x, f.exponent);
  if (b.squared) {
    // R_t^2 in Cl^x with x odd gives R_t in Cl^x.
    if (x % 2 == 0)
      throw Error(ErrorCode::InvalidArgument, "odd-index step needs an odd exponent");
    return {x, false};
  }
  return {x, false};
}

std::int64_t long_exponent(const std::vector<std::int64_t>& invariants) {
  check_invariants(invariants);
  const std::int64_t n = product(invariants);
  const std::int64_t e = top_invariant(invariants);
  const TwoPart t = two_part(invariants);
  if (t.nontrivial == 0) return (n / e) * d_of(e);
  if (t.nontrivial >= 2 && t.top_multiplicity >= 2) return n / (2 * e);
  return n / e;
}

LongComparison compare_with_long(const std::vector<std::int64_t>& invariants) {
  LongComparison c;
  c.bound_exponent = kummer_bound_exponent(invariants).exponent;
  c.long_exponent = long_exponent(invariants);
  c.contains = c.bound_exponent == 0 ? c.long_exponent == 0
                                     : c.long_exponent % c.bound_exponent == 0;
  c.tight = c.bound_exponent == c.long_exponent;
  const TwoPart t = two_part(invariants);
  c.exceptional = t.nontrivial >= 2 && t.top_multiplicity == 1;
  return c;
}

LongComparison compare_with_long(const GroupTable& g) {
  return compare_with_long(abelian_invariants(g));
}

nlohmann::json to_json(const LongComparison& c) {
  return {{"bound_exponent", c.bound_exponent},
          {"long_exponent", c.long_exponent},
          {"contains", c.contains},
          {"tight", c.tight},
          {"exceptional", c.exceptional}};
}

std::vector<std::int64_t> abelian_invariants(const GroupTable& g) {
  require_abelian(g);
  return abelianization(g);
}

namespace {

void chains(std::int64_t rest, std::int64_t prev, std::vector<std::int64_t>& cur,
            std::vector<std::vector<std::int64_t>>& out) {
  if (rest == 1) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t d = std::max<std::int64_t>(prev, 2); d <= rest; ++d) {
    if (rest % d != 0 || d % prev != 0) continue;
    cur.push_back(d);
    chains(rest / d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  chains(n, 1, cur, out);
  return out;
}

}  // namespace stickel
