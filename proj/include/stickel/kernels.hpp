#pragma once

// Data-parallel kernels. Each OpenMP kernel has a plain serial reference
// next to it; tests hold the two to identical outputs and bench/ times them.

#include <cstdint>
#include <optional>
#include <vector>

#include "stickel/cyclotomic.hpp"
#include "stickel/group.hpp"

namespace stickel {
class CharacterTable;
struct VirtualCharacter;
}  // namespace stickel

namespace stickel::kernels {

int max_threads();
void set_num_threads(int n);

std::vector<std::int64_t> element_orders_serial(const CayleyTable& t);
std::vector<std::int64_t> element_orders(const CayleyTable& t);

/// Least element index in the conjugacy class of each element. The serial
/// reference grows orbits breadth-first; the parallel kernel takes the minimum
/// of t x t^-1 per element.
std::vector<Elem> class_minima_serial(const CayleyTable& t);
std::vector<Elem> class_minima(const CayleyTable& t);

/// mult[i][c][j]: multiplicity of zeta_m^j in the restriction of irreducible i
/// to <rep(c)>, m = rep_orders[c]. The serial reference runs the exact DFT in
/// cyclotomic arithmetic; the parallel kernel works on integer exponent
/// vectors and falls back to the exact route if a value is not integral.
using MultiplicityCube = std::vector<std::vector<std::vector<std::int64_t>>>;
MultiplicityCube irreducible_multiplicities_serial(
    const ConjClassSet& classes, const std::vector<std::vector<Cyclotomic>>& irreducibles);
MultiplicityCube irreducible_multiplicities(
    const ConjClassSet& classes, const std::vector<std::vector<Cyclotomic>>& irreducibles);

/// m_j = (1/m) sum_k seq[k] zeta_m^{-jk} for values given as integer
/// exponent vectors at conductor n (m = seq.size() divides n). nullopt when a
/// multiplicity is not an integer.
std::optional<std::vector<std::int64_t>> dft_integer_forms(
    const std::vector<const std::vector<std::int64_t>*>& seq, std::int64_t n);

/// Exponents e in [lo, hi] where gcd_{m|e,m>1} (e/m)(m-1) != c(e).
std::vector<std::int64_t> gcd_claim_failures_serial(std::int64_t lo, std::int64_t hi);
std::vector<std::int64_t> gcd_claim_failures(std::int64_t lo, std::int64_t hi);

/// Three-way integrality tally over a batch of virtual characters.
struct IntegralityTally {
  std::size_t samples = 0;
  std::size_t theta_integral = 0;
  std::size_t in_ag = 0;
  std::size_t det_trivial = 0;
  std::size_t disagreements = 0;
  friend bool operator==(const IntegralityTally&, const IntegralityTally&) = default;
};
IntegralityTally integrality_tally_serial(const CharacterTable& table,
                              const std::vector<VirtualCharacter>& batch);
IntegralityTally integrality_tally(const CharacterTable& table, const std::vector<VirtualCharacter>& batch);

}  // namespace stickel::kernels
