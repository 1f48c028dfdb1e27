#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "stickel/characters.hpp"
#include "stickel/intlat.hpp"

namespace stickel {

/// Element of QG, coefficients indexed by group element.
struct GroupRingElt {
  std::vector<Rational> coeffs;
  bool is_integral() const;
  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;
};

/// Element of the free Q-module on conjugacy classes.
struct ClassSumElt {
  std::vector<Rational> coeffs;
  bool is_integral() const;
  friend bool operator==(const ClassSumElt&, const ClassSumElt&) = default;
};

/// <phi, class c>: sum_j (j/m) m_j over the restriction to <rep(c)>.
Rational pairing(const CharacterTable& t, const VirtualCharacter& phi, ClassId c);
/// <phi, s> for an element of the bound group.
Rational pairing_at(const CharacterTable& t, const VirtualCharacter& phi, Elem s);

/// Class-sum form, from the cached irreducible multiplicities.
ClassSumElt theta_bar(const CharacterTable& t, const VirtualCharacter& phi);
/// Group-ring form, element by element: the DFT runs along the powers of each
/// element in the Cayley table.
GroupRingElt theta(const CharacterTable& t, const VirtualCharacter& phi);
GroupRingElt iota(const GroupTable& g, const ClassSumElt& x);

/// Coefficient (n/m)(m-1)/2 on every class of representative order m; needs
/// no character table.
ClassSumElt theta_regular_closed_form(const GroupTable& g);

/// Integrality of every <phi, rep(c)>, with the pairings recomputed by an
/// exact cyclotomic DFT of phi's own values.
bool in_AG(const CharacterTable& t, const VirtualCharacter& phi);

/// (det phi)(rep(c)) = zeta_m^{x_c}: x_c = sum_j j m_j mod m, per class.
std::vector<std::int64_t> det_character(const CharacterTable& t, const VirtualCharacter& phi);
bool det_is_trivial(const std::vector<std::int64_t>& det);

/// Z-basis of A_G (rows of the HNF kernel of the determinant congruences).
std::vector<VirtualCharacter> AG_basis(const CharacterTable& t);
/// [R_G : A_G] = |det| of the basis.
Integer AG_index(const std::vector<VirtualCharacter>& basis);
/// Membership by solving against the basis.
bool in_AG_lattice(const std::vector<VirtualCharacter>& basis, const VirtualCharacter& phi);

/// HNF basis of S_G = Theta_G(A_G) in ZG coordinates (element order); rows
/// that reduce to zero are kept at the bottom.
IntMatrix stickelberger_module(const CharacterTable& t);
/// Same lattice in class-sum coordinates; works for unbound tables.
IntMatrix stickelberger_module_classes(const CharacterTable& t);

/// rho_G in A_G, from the Sylow-2 classification.
bool rho_in_AG(const GroupTable& g);
/// Same statement from the parity of every left-regular permutation.
bool rho_in_AG_by_sign(const GroupTable& g);

/// phi^omega: values mapped by zeta -> zeta^k and re-expressed in the
/// irreducible basis.
VirtualCharacter galois_twist(const CharacterTable& t, const VirtualCharacter& phi,
                              std::int64_t k);
/// Theta_bar(phi^omega) == Theta_bar(phi)^omega, with classes moved by
/// power_class(., k^-1 mod e). Throws for k not coprime to e.
bool omega_equivariance_check(const CharacterTable& t, const VirtualCharacter& phi,
                              std::int64_t k);

/// [{class_rep, rep_order, coeff: "p/q"}, ...]
nlohmann::json theta_to_json(const CharacterTable& t, const ClassSumElt& x);

}  // namespace stickel
