#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stickel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);

/// n-th cyclotomic polynomial, via the Moebius product of (x^d - 1).
IntPoly cyclo_poly(std::int64_t n);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
std::int64_t euler_phi(std::int64_t n);

/// Element of Q(zeta_n) in the power basis zeta_n^0 .. zeta_n^{phi(n)-1}
/// reduced modulo Phi_n. Two values are equal iff their coefficient vectors
/// agree after lifting to a common conductor.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT: rationals embed implicitly
  Cyclotomic(long r);             // NOLINT

  /// zeta_n^k with k reduced mod n.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

  /// Sum of coeff * zeta_n^exp for exponent-indexed terms (any exponents).
  static Cyclotomic from_terms(std::int64_t n,
                               const std::vector<std::pair<Rational, std::int64_t>>& terms);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Re-expresses this value in Q(zeta_N); N must be a multiple of conductor().
  Cyclotomic lifted(std::int64_t N) const;

  /// Image under zeta_n -> zeta_n^k. Throws for gcd(k, n) != 1.
  Cyclotomic galois_apply(std::int64_t k) const;
  Cyclotomic conj() const { return galois_apply(-1); }

  std::optional<Rational> to_rational() const;
  bool is_zero() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(std::int64_t n, std::vector<Rational> coeffs);

  std::int64_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

// JSON: {"conductor": n, "terms": [[num, den, exp], ...]}. Parsing also
// accepts a bare integer or a "p/q" string for rational values.
nlohmann::json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

/// Integer coordinates of x lifted to conductor n, laid out as an
/// exponent-indexed vector of length n (entries past phi(n) are zero).
/// nullopt when a coordinate is not an integer or does not fit in 32 bits.
std::optional<std::vector<std::int64_t>> integer_exponent_form(const Cyclotomic& x,
                                                               std::int64_t n);

/// Canonical integer coordinates of sum_k v[k] zeta_n^k (v has length n).
std::vector<std::int64_t> reduce_integer_exponents(std::int64_t n,
                                                   const std::vector<std::int64_t>& v);

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace stickel
