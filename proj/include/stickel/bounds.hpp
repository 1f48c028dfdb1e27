#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stickel/galois.hpp"
#include "stickel/group.hpp"

namespace stickel {

struct BoundFactor {
  ClassId orbit_rep = 0;
  std::int64_t m = 1;
  FieldDescriptor field;
  std::int64_t exponent = 0;
  std::size_t orbit_size = 1;

  friend bool operator==(const BoundFactor&, const BoundFactor&) = default;
};

/// prod_factors N_{K(s)/K}(Cl(O_{K(s)}))^exponent, bounding R_t or (squared)
/// R_t^2.
struct BoundExpression {
  std::string group;
  std::vector<std::int64_t> kappa;
  bool squared = false;
  std::vector<BoundFactor> factors;  // sorted by (m, orbit_rep)
};

nlohmann::json to_json(const BoundExpression& b);

/// One factor per non-identity Omega-orbit.
BoundExpression steinitz_bound(const GroupTable& g, const OmegaAction& a);

/// Abelian form: one factor per m | e, m > 1, with the full K(zeta_m)
/// descriptor. Throws NotAbelian.
BoundExpression abelian_bound(const GroupTable& g, const OmegaAction& a);

/// Factors of equal m collapsed into one (first orbit's representative and
/// field, orbit sizes summed). The exponent depends only on m, so it is kept.
BoundExpression merge_by_m(const BoundExpression& b);

/// gcd of (p-1) over primes p | e; c(1) = 0.
std::int64_t c_of(std::int64_t e);
/// gcd of (p-1)/2 over primes p | e for odd e, 1 for even e.
std::int64_t d_of(std::int64_t e);

/// gcd over m | e, m > 1, of (e/m)(m-1), compared with c(e).
std::int64_t divisor_gcd(std::int64_t e);
bool gcd_claim(std::int64_t e);

struct KummerExponent {
  std::int64_t exponent = 0;
  bool squared = false;
  friend bool operator==(const KummerExponent&, const KummerExponent&) = default;
};

/// Exponent for abelian G when K contains the e-th roots of unity (H trivial).
KummerExponent kummer_bound_exponent(const std::vector<std::int64_t>& invariants);
KummerExponent kummer_bound_exponent(const GroupTable& g);
/// Same value read off the assembled bound: gcd of the factor exponents under
/// trivial H, with the odd-index step applied for a cyclic Sylow-2 subgroup.
KummerExponent kummer_exponent_from_bound(const GroupTable& g);

/// Long's exact exponent, from the invariant factors.
std::int64_t long_exponent(const std::vector<std::int64_t>& invariants);

struct LongComparison {
  std::int64_t bound_exponent = 0;
  std::int64_t long_exponent = 0;
  bool contains = false;
  bool tight = false;
  /// Sylow-2 noncyclic with a top elementary divisor occurring once.
  bool exceptional = false;
};

LongComparison compare_with_long(const std::vector<std::int64_t>& invariants);
LongComparison compare_with_long(const GroupTable& g);
nlohmann::json to_json(const LongComparison& c);

/// Invariant factors of an abelian group table. Throws NotAbelian.
std::vector<std::int64_t> abelian_invariants(const GroupTable& g);

/// All invariant-factor lists d_1 | ... | d_k (d_i >= 2) with product n.
std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n);

}  // namespace stickel
