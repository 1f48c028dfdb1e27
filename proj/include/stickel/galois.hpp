#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stickel/group.hpp"

namespace stickel {

/// Image H of the cyclotomic character in (Z/eZ)^x.
struct OmegaAction {
  std::int64_t e = 1;
  ResidueGroup H;

  static OmegaAction full(std::int64_t e);
  static OmegaAction trivial(std::int64_t e);
  /// "full", "trivial" or "gens=a,b,...". Generators not coprime to e throw
  /// KappaMismatch; anything else unparseable throws InvalidArgument.
  static OmegaAction parse(const std::string& spec, std::int64_t e);
};

/// K(s) described inside Gal(K(zeta_m)/K) = H_m.
struct FieldDescriptor {
  std::int64_t m = 1;
  ResidueGroup H_m;
  ResidueGroup fixer;
  std::int64_t degree = 1;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

nlohmann::json to_json(const FieldDescriptor& f);

using Orbit = std::vector<ClassId>;

/// Orbits of classes under c -> power_class(c, h), h in H (or h^-1 with
/// inverse_convention). Orbits and their members are sorted; the first member
/// is the representative. Throws KappaMismatch if A.e != exponent(G).
std::vector<Orbit> omega_orbits(const GroupTable& g, const OmegaAction& a,
                                bool inverse_convention = false);

/// {h in H_m : s^h conjugate to s}, by scanning H_m.
ResidueGroup class_stabilizer(const GroupTable& g, const OmegaAction& a, Elem s);

/// fixer = H_m meet mu(N_G(<s>)).
FieldDescriptor field_of_class(const GroupTable& g, const OmegaAction& a, Elem s);

/// fixer = (elements of H whose residue mod m lies in mu_s(N_G(<s>)))
/// reduced mod m, with N_G(<s>) built as the set-stabilizer of <s>.
FieldDescriptor e_field_of_class(const GroupTable& g, const OmegaAction& a, Elem s);

/// Size of the orbit of the class of s equals the degree of field_of_class.
bool orbit_degree_check(const GroupTable& g, const OmegaAction& a, Elem s);

}  // namespace stickel
