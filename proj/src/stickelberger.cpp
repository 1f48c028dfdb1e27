#include "stickel/stickelberger.hpp"

#include <numeric>

#include "stickel/error.hpp"

namespace stickel {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Rational pairing_from_multiplicities(const std::vector<std::int64_t>& mult) {
  const auto m = static_cast<std::int64_t>(mult.size());
  Integer num = 0;
  for (std::int64_t j = 0; j < m; ++j) num += Integer(j) * Integer(mult[j]);
  return make_rational(num, Integer(m));
}

std::int64_t det_exponent(const std::vector<std::int64_t>& mult) {
  const auto m = static_cast<std::int64_t>(mult.size());
  std::int64_t x = 0;
  for (std::int64_t j = 0; j < m; ++j) x = mod_floor(x + j * mod_floor(mult[j], m), m);
  return x;
}

}  // namespace

bool GroupRingElt::is_integral() const {
  for (const auto& c : coeffs)
    if (!is_integer(c)) return false;
  return true;
}

bool ClassSumElt::is_integral() const {
  for (const auto& c : coeffs)
    if (!is_integer(c)) return false;
  return true;
}

Rational pairing(const CharacterTable& t, const VirtualCharacter& phi, ClassId c) {
  return pairing_from_multiplicities(cached_multiplicities(t, phi, c));
}

Rational pairing_at(const CharacterTable& t, const VirtualCharacter& phi, Elem s) {
  return pairing_from_multiplicities(restrict_multiplicities(t, phi, s));
}

ClassSumElt theta_bar(const CharacterTable& t, const VirtualCharacter& phi) {
  ClassSumElt out;
  out.coeffs.reserve(t.num_classes());
  for (ClassId c = 0; c < t.num_classes(); ++c) out.coeffs.push_back(pairing(t, phi, c));
  return out;
}

GroupRingElt theta(const CharacterTable& t, const VirtualCharacter& phi) {
  const GroupTable* g = t.group();
  if (!g) throw Error(ErrorCode::InvalidArgument, "theta needs a table bound to a group");
  const std::int64_t e = t.exponent();
  const std::vector<Cyclotomic> vals = values(t, phi);
  std::vector<std::vector<std::int64_t>> forms;
  bool integral_forms = true;
  for (const auto& v : vals) {
    auto f = integer_exponent_form(v, e);
    if (!f) {
      integral_forms = false;
      break;
    }
    forms.push_back(std::move(*f));
  }

  GroupRingElt out;
  out.coeffs.reserve(g->order());
  for (Elem s = 0; s < g->order(); ++s) {
    std::optional<std::vector<std::int64_t>> mult;
    if (integral_forms) {
      std::vector<const std::vector<std::int64_t>*> seq;
      Elem y = g->identity();
      for (std::int64_t k = 0; k < g->element_order(s); ++k) {
        seq.push_back(&forms[t.class_of(y)]);
        y = g->mul(y, s);
      }
      mult = kernels::dft_integer_forms(seq, e);
    }
    if (!mult) mult = restrict_multiplicities(t, phi, s);
    out.coeffs.push_back(pairing_from_multiplicities(*mult));
  }
  return out;
}

GroupRingElt iota(const GroupTable& g, const ClassSumElt& x) {
  GroupRingElt out;
  out.coeffs.reserve(g.order());
  for (Elem s = 0; s < g.order(); ++s) out.coeffs.push_back(x.coeffs.at(g.class_of(s)));
  return out;
}

ClassSumElt theta_regular_closed_form(const GroupTable& g) {
  const std::int64_t n = g.order();
  ClassSumElt out;
  for (auto m : g.classes().rep_orders) out.coeffs.push_back(make_rational(Integer(n * (m - 1)), Integer(2 * m)));
  return out;
}

bool in_AG(const CharacterTable& t, const VirtualCharacter& phi) {
  for (ClassId c = 0; c < t.num_classes(); ++c)
    if (!is_integer(pairing_from_multiplicities(restrict_multiplicities_at_class(t, phi, c))))
      return false;
  return true;
}

std::vector<std::int64_t> det_character(const CharacterTable& t, const VirtualCharacter& phi) {
  std::vector<std::int64_t> out;
  for (ClassId c = 0; c < t.num_classes(); ++c)
    out.push_back(det_exponent(cached_multiplicities(t, phi, c)));
  return out;
}

bool det_is_trivial(const std::vector<std::int64_t>& det) {
  for (auto x : det)
    if (x != 0) return false;
  return true;
}

std::vector<VirtualCharacter> AG_basis(const CharacterTable& t) {
  const std::size_t r = t.num_irreducibles();
  const std::size_t k = t.num_classes();
  IntMatrix a(r, k);
  std::vector<Integer> moduli;
  for (ClassId c = 0; c < k; ++c) moduli.emplace_back(t.classes().rep_orders[c]);
  for (std::size_t i = 0; i < r; ++i)
    for (ClassId c = 0; c < k; ++c) {
      const auto& mult = t.irreducible_multiplicities(i, c);
      std::int64_t x = 0;
      for (std::size_t j = 0; j < mult.size(); ++j) x += static_cast<std::int64_t>(j) * mult[j];
      a(i, c) = x;
    }
  const IntMatrix basis = kernel_mod(a, moduli);
  std::vector<VirtualCharacter> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    VirtualCharacter phi;
    for (std::size_t j = 0; j < r; ++j) {
      if (!basis(i, j).fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "A_G basis coefficient overflow");
      phi.coeffs.push_back(basis(i, j).get_si());
    }
    out.push_back(std::move(phi));
  }
  return out;
}

namespace {

IntMatrix basis_matrix(const std::vector<VirtualCharacter>& basis) {
  IntMatrix m;
  for (const auto& phi : basis) {
    std::vector<Integer> row;
    for (auto c : phi.coeffs) row.emplace_back(c);
    m.append_row(row);
  }
  return m;
}

}  // namespace

Integer AG_index(const std::vector<VirtualCharacter>& basis) {
  return abs(determinant(basis_matrix(basis)));
}

bool in_AG_lattice(const std::vector<VirtualCharacter>& basis, const VirtualCharacter& phi) {
  const IntMatrix h = hermite_normal_form(basis_matrix(basis));
  const std::size_t r = h.cols();
  if (phi.coeffs.size() != r)
    throw Error(ErrorCode::InvalidArgument, "virtual character has wrong length");
  // Full-rank square HNF is upper triangular; solve y * h = phi.
  std::vector<Integer> rest(phi.coeffs.begin(), phi.coeffs.end());
  for (std::size_t i = 0; i < r; ++i) {
    if (h(i, i) == 0) throw Error(ErrorCode::InvalidArgument, "A_G basis is not of full rank");
    if (rest[i] % h(i, i) != 0) return false;
    const Integer y = rest[i] / h(i, i);
    for (std::size_t j = i; j < r; ++j) rest[j] -= y * h(i, j);
  }
  return true;
}

IntMatrix stickelberger_module(const CharacterTable& t) {
  IntMatrix rows;
  for (const auto& phi : AG_basis(t)) {
    const GroupRingElt th = theta(t, phi);
    if (!th.is_integral())
      throw Error(ErrorCode::TableValidation, "Theta of an A_G basis vector is not integral");
    std::vector<Integer> row;
    for (const auto& c : th.coeffs) row.push_back(c.get_num());
    rows.append_row(row);
  }
  return hermite_normal_form(rows);
}

IntMatrix stickelberger_module_classes(const CharacterTable& t) {
  IntMatrix rows;
  for (const auto& phi : AG_basis(t)) {
    const ClassSumElt th = theta_bar(t, phi);
    if (!th.is_integral())
      throw Error(ErrorCode::TableValidation, "Theta of an A_G basis vector is not integral");
    std::vector<Integer> row;
    for (const auto& c : th.coeffs) row.push_back(c.get_num());
    rows.append_row(row);
  }
  return hermite_normal_form(rows);
}

bool rho_in_AG(const GroupTable& g) {
  return sylow2_class(g) != Sylow2Class::CyclicNontrivial;
}

bool rho_in_AG_by_sign(const GroupTable& g) {
  for (Elem s = 0; s < g.order(); ++s)
    if (regular_sign(g, s) != 1) return false;
  return true;
}

VirtualCharacter galois_twist(const CharacterTable& t, const VirtualCharacter& phi,
                              std::int64_t k) {
  const std::int64_t e = t.exponent();
  if (std::gcd(mod_floor(k, e), e) != 1 && e > 1)
    throw Error(ErrorCode::InvalidArgument,
                "Galois exponent " + std::to_string(k) + " not coprime to e = " + std::to_string(e));
  std::vector<Cyclotomic> twisted;
  for (const auto& v : values(t, phi)) twisted.push_back(v.lifted(e).galois_apply(k));
  return decompose(t, twisted);
}

bool omega_equivariance_check(const CharacterTable& t, const VirtualCharacter& phi,
                              std::int64_t k) {
  const std::int64_t e = t.exponent();
  const VirtualCharacter twisted = galois_twist(t, phi, k);
  const ClassSumElt left = theta_bar(t, twisted);
  const ClassSumElt base = theta_bar(t, phi);
  std::int64_t kinv = 1;
  while (mod_floor(kinv * k, e) != 1 % e) ++kinv;
  ClassSumElt right{std::vector<Rational>(t.num_classes(), 0)};
  for (ClassId c = 0; c < t.num_classes(); ++c)
    right.coeffs[power_class(t.classes(), c, kinv)] = base.coeffs[c];
  return left == right;
}

nlohmann::json theta_to_json(const CharacterTable& t, const ClassSumElt& x) {
  nlohmann::json out = nlohmann::json::array();
  for (ClassId c = 0; c < t.num_classes(); ++c) {
    nlohmann::json entry{{"class", c},
                         {"rep_order", t.classes().rep_orders[c]},
                         {"coeff", to_string(x.coeffs[c])}};
    entry["class_rep"] = t.classes().reps.empty() ? nlohmann::json(nullptr)
                                                  : nlohmann::json(t.classes().reps[c]);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace stickel
