#include "stickel/characters.hpp"

#include <numeric>

#include "stickel/error.hpp"

namespace stickel {

namespace {

[[noreturn]] void fail(const std::string& relation, const std::string& detail = "") {
  throw Error(ErrorCode::TableValidation,
              "character table violates " + relation + (detail.empty() ? "" : ": " + detail));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Exponent-indexed integer forms of all values at conductor e, or empty when
// some value is not integral.
std::vector<std::vector<std::vector<std::int64_t>>> integer_forms(
    const std::vector<std::vector<Cyclotomic>>& irr, std::int64_t e) {
  std::vector<std::vector<std::vector<std::int64_t>>> out(irr.size());
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (const auto& v : irr[i]) {
      auto f = integer_exponent_form(v, e);
      if (!f) return {};
      out[i].push_back(std::move(*f));
    }
  return out;
}

// Inner product sum_c |c| a(c) conj(b(c)) in Z[x]/(x^e - 1), reduced.
std::vector<std::int64_t> weighted_inner(const std::vector<std::vector<std::int64_t>>& a,
                                         const std::vector<std::vector<std::int64_t>>& b,
                                         const std::vector<std::int64_t>& sizes, std::int64_t e) {
  std::vector<std::int64_t> acc(static_cast<std::size_t>(e), 0);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const auto& x = a[c];
    const auto& y = b[c];
    for (std::int64_t i = 0; i < e; ++i) {
      if (x[i] == 0) continue;
      for (std::int64_t j = 0; j < e; ++j) {
        if (y[j] == 0) continue;
        acc[mod_floor(i - j, e)] += sizes[c] * x[i] * y[j];
      }
    }
  }
  return reduce_integer_exponents(e, acc);
}

}  // namespace

void validate_table_data(const ConjClassSet& classes,
                         const std::vector<std::vector<Cyclotomic>>& irr,
                         std::int64_t declared_order) {
  const std::size_t k = classes.count();
  if (classes.rep_orders.size() != k || classes.power_map.size() != k)
    fail("class data shape");
  std::int64_t n = 0;
  for (auto s : classes.sizes) {
    if (s < 1) fail("class sizes", "non-positive size");
    n += s;
  }
  if (declared_order > 0 && n != declared_order)
    fail("class sizes", "sizes sum to " + std::to_string(n) + ", order is " +
                            std::to_string(declared_order));
  for (auto s : classes.sizes)
    if (n % s != 0) fail("class sizes", "a class size does not divide the order");

  std::int64_t e = 1;
  for (auto m : classes.rep_orders) {
    if (m < 1 || n % m != 0) fail("representative orders", "order does not divide n");
    e = std::lcm(e, m);
  }
  std::size_t identity_count = 0;
  ClassId id = 0;
  for (ClassId c = 0; c < k; ++c)
    if (classes.rep_orders[c] == 1) {
      ++identity_count;
      id = c;
    }
  if (identity_count != 1 || classes.sizes[id] != 1) fail("identity class");

  for (ClassId c = 0; c < k; ++c) {
    const std::int64_t m = classes.rep_orders[c];
    if (static_cast<std::int64_t>(classes.power_map[c].size()) != m)
      fail("power map required", "class " + std::to_string(c));
    for (std::int64_t j = 0; j < m; ++j) {
      const ClassId d = classes.power_map[c][j];
      if (d >= k) fail("power map", "class index out of range");
      if (classes.rep_orders[d] != m / std::gcd(m, j))
        fail("power map orders", "class " + std::to_string(c) + " power " + std::to_string(j));
    }
    if (classes.power_map[c][0] != id || (m > 1 && classes.power_map[c][1] != c))
      fail("power map orders", "powers 0 and 1 of class " + std::to_string(c));
  }

  if (irr.size() != k)
    fail("table shape", std::to_string(irr.size()) + " characters for " + std::to_string(k) +
                            " classes");
  for (const auto& row : irr) {
    if (row.size() != k) fail("table shape", "character with wrong number of values");
    for (const auto& v : row)
      if (e % v.conductor() != 0) fail("value conductor", "a value has conductor not dividing e");
  }

  std::int64_t deg_sq = 0;
  for (const auto& row : irr) {
    const auto d = row[id].to_rational();
    if (!d || !is_integer(*d) || *d <= 0) fail("degrees", "value at identity is not a positive integer");
    deg_sq += d->get_num().get_si() * d->get_num().get_si();
  }
  if (deg_sq != n) fail("degree sum", "sum of squared degrees is " + std::to_string(deg_sq));

  const auto forms = integer_forms(irr, e);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      bool ok = true;
      if (!forms.empty()) {
        const auto ip = weighted_inner(forms[a], forms[b], classes.sizes, e);
        ok = ip[0] == (a == b ? n : 0);
        for (std::size_t i = 1; i < ip.size() && ok; ++i) ok = ip[i] == 0;
      } else {
        Cyclotomic acc;
        for (ClassId c = 0; c < k; ++c)
          acc += irr[a][c] * irr[b][c].conj() * Rational(classes.sizes[c]);
        ok = acc == Cyclotomic(Rational(a == b ? n : 0));
      }
      if (!ok) fail("row orthogonality", "characters " + std::to_string(a) + " and " + std::to_string(b));
    }

  std::vector<std::int64_t> moved(static_cast<std::size_t>(e));
  for (std::size_t r = 0; r < irr.size(); ++r)
    for (ClassId c = 0; c < k; ++c) {
      const std::int64_t m = classes.rep_orders[c];
      for (std::int64_t j = 2; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        std::int64_t unit = j;  // same residue mod m, coprime to e
        while (std::gcd(unit, e) != 1) unit += m;
        const ClassId target = classes.power_map[c][j];
        bool ok;
        if (!forms.empty()) {
          std::fill(moved.begin(), moved.end(), 0);
          const auto& src = forms[r][c];
          for (std::int64_t i = 0; i < e; ++i)
            if (src[i] != 0) moved[i * unit % e] += src[i];
          const auto red = reduce_integer_exponents(e, moved);
          ok = std::equal(red.begin(), red.end(), forms[r][target].begin());
        } else {
          ok = irr[r][target] == irr[r][c].galois_apply(unit);
        }
        if (!ok) fail("power map galois", "chi(s^k) != chi(s)^(sigma_k) at class " + std::to_string(c));
      }
    }
}

CharacterTable::CharacterTable(ConjClassSet classes,
                               std::vector<std::vector<Cyclotomic>> irreducibles,
                               std::shared_ptr<const GroupTable> group)
    : group_(std::move(group)), classes_(std::move(classes)), irreducibles_(std::move(irreducibles)) {
  order_ = 0;
  for (auto s : classes_.sizes) order_ += s;
  exponent_ = 1;
  for (auto m : classes_.rep_orders) exponent_ = std::lcm(exponent_, m);
  identity_class_ = classes_.identity_class();
  for (const auto& row : irreducibles_) {
    if (row.size() != classes_.count()) fail("table shape");
    const auto d = row[identity_class_].to_rational();
    if (!d || !is_integer(*d) || *d <= 0) fail("degrees");
    degrees_.push_back(d->get_num().get_si());
  }
  multiplicities_ = kernels::irreducible_multiplicities(classes_, irreducibles_);
  forms_ = stickel::integer_forms(irreducibles_, exponent_);
}

ClassId CharacterTable::class_of(Elem x) const {
  if (!group_)
    throw Error(ErrorCode::InvalidArgument, "element-level operation on an unbound table");
  return classes_.class_of.at(x);
}

void validate_table(const CharacterTable& t) {
  validate_table_data(t.classes(), t.irreducibles(), t.group() ? t.group()->order() : 0);
}

bool column_orthogonality_holds(const CharacterTable& t) {
  const std::size_t k = t.num_classes();
  for (ClassId c = 0; c < k; ++c)
    for (ClassId d = c; d < k; ++d) {
      Cyclotomic acc;
      for (const auto& row : t.irreducibles()) acc += row[c] * row[d].conj();
      const Rational expect = c == d ? make_rational(Integer(t.order()), Integer(t.classes().sizes[c])) : Rational(0);
      if (!(acc == Cyclotomic(expect))) return false;
    }
  return true;
}

// ---------------------------------------------------------------- closed forms

CharacterTable abelian_table(std::shared_ptr<const GroupTable> g) {
  if (!g->is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian_table: group is not abelian");
  const std::uint32_t n = g->order();
  const std::int64_t e = g->exponent();

  // Characters as exponent maps x -> a(x), chi(x) = zeta_e^a(x); extended one
  // generator at a time.
  std::vector<Elem> gens;
  if (g->origin().kind == GroupOrigin::Kind::Abelian) {
    std::int64_t stride = 1;
    for (auto d : g->origin().invariants) {
      gens.push_back(static_cast<Elem>(stride));
      stride *= d;
    }
  }
  std::vector<char> in_h(n, 0);
  std::vector<Elem> members{g->identity()};
  in_h[g->identity()] = 1;
  std::vector<std::vector<std::int64_t>> chars{std::vector<std::int64_t>(n, 0)};

  auto extend = [&](Elem gen) {
    if (in_h[gen]) return;
    std::int64_t k = 1;
    Elem gk = gen;
    while (!in_h[gk]) {
      gk = g->mul(gk, gen);
      ++k;
    }
    const std::size_t old = members.size();
    std::vector<Elem> gpow{g->identity()};
    for (std::int64_t i = 1; i < k; ++i) gpow.push_back(g->mul(gpow.back(), gen));
    for (std::int64_t i = 1; i < k; ++i)
      for (std::size_t h = 0; h < old; ++h) {
        const Elem y = g->mul(gpow[i], members[h]);
        in_h[y] = 1;
        members.push_back(y);
      }
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& chi : chars) {
      const std::int64_t a0 = chi[gk];
      const std::int64_t step = e / k;
      for (std::int64_t t = 0; t < k; ++t) {
        const std::int64_t b = a0 / k + t * step;
        std::vector<std::int64_t> ext(n, 0);
        for (std::int64_t i = 0; i < k; ++i)
          for (std::size_t h = 0; h < old; ++h)
            ext[g->mul(gpow[i], members[h])] = mod_floor(i * b + chi[members[h]], e);
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
  };
  for (Elem x : gens) extend(x);
  for (Elem x = 0; x < n; ++x) extend(x);

  std::vector<Cyclotomic> roots;
  roots.reserve(static_cast<std::size_t>(e));
  for (std::int64_t a = 0; a < e; ++a) roots.push_back(Cyclotomic::root_of_unity(e, a));
  std::vector<std::vector<Cyclotomic>> irr;
  irr.reserve(chars.size());
  const auto& cls = g->classes();
  for (const auto& chi : chars) {
    std::vector<Cyclotomic> row;
    row.reserve(cls.count());
    for (ClassId c = 0; c < cls.count(); ++c) row.push_back(roots[chi[cls.reps[c]]]);
    irr.push_back(std::move(row));
  }
  return CharacterTable(cls, std::move(irr), std::move(g));
}

CharacterTable metacyclic_table(std::shared_ptr<const GroupTable> g) {
  const GroupOrigin& o = g->origin();
  if (o.kind != GroupOrigin::Kind::Metacyclic)
    throw Error(ErrorCode::InvalidArgument, "metacyclic_table: group was not built as metacyclic");
  const std::int64_t pa = o.pa, q = o.q, r = o.r;
  const auto& cls = g->classes();

  std::vector<std::int64_t> rpow{1 % pa};
  for (std::int64_t i = 1; i < q; ++i) rpow.push_back(rpow.back() * r % pa);

  // Little-group construction: each orbit of a in Z/pa under a -> a*r, with
  // stabilizer <t^d>, gives q/d characters of degree d induced from
  // <s, t^d>, where psi_a extends by a (q/d)-th root of unity on t^d.
  std::vector<std::vector<Cyclotomic>> irr;
  std::vector<char> seen(static_cast<std::size_t>(pa), 0);
  for (std::int64_t a = 0; a < pa; ++a) {
    if (seen[a]) continue;
    std::int64_t d = 1;
    while (a * rpow[d % q] % pa != a) ++d;
    for (std::int64_t l = 0; l < d; ++l) seen[a * rpow[l] % pa] = 1;
    const std::int64_t qd = q / d;
    for (std::int64_t b = 0; b < qd; ++b) {
      std::vector<Cyclotomic> row;
      for (ClassId c = 0; c < cls.count(); ++c) {
        const std::int64_t i = cls.reps[c] % pa, j = cls.reps[c] / pa;
        if (j % d != 0) {
          row.emplace_back(0L);
          continue;
        }
        const std::int64_t big = std::lcm(pa, qd);
        std::vector<std::pair<Rational, std::int64_t>> terms;
        for (std::int64_t l = 0; l < d; ++l)
          terms.emplace_back(Rational(1), (a * i % pa * rpow[l] % pa) * (big / pa) + b * (j / d) % qd * (big / qd));
        row.push_back(Cyclotomic::from_terms(big, terms));
      }
      irr.push_back(std::move(row));
    }
  }
  try {
    validate_table_data(cls, irr, g->order());
  } catch (const Error& err) {
    throw Error(ErrorCode::TableValidation,
                std::string("metacyclic construction does not give the irreducibles (") + err.what() +
                    "); supply a table");
  }
  return CharacterTable(cls, std::move(irr), std::move(g));
}

// ---------------------------------------------------------------- virtual characters

VirtualCharacter regular_character(const CharacterTable& t) { return {t.degrees()}; }

VirtualCharacter trivial_character(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    bool trivial = true;
    for (const auto& v : t.irreducible(i)) trivial = trivial && v == Cyclotomic(1L);
    if (trivial) return irreducible_character(t, i);
  }
  throw Error(ErrorCode::TableValidation, "table has no trivial character");
}

VirtualCharacter irreducible_character(const CharacterTable& t, std::size_t i) {
  VirtualCharacter phi{std::vector<std::int64_t>(t.num_irreducibles(), 0)};
  phi.coeffs.at(i) = 1;
  return phi;
}

Cyclotomic value(const CharacterTable& t, const VirtualCharacter& phi, ClassId c) {
  if (phi.coeffs.size() != t.num_irreducibles())
    throw Error(ErrorCode::InvalidArgument, "virtual character has wrong length");
  Cyclotomic acc;
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
    if (phi.coeffs[i] != 0) acc += t.irreducible(i)[c] * Rational(phi.coeffs[i]);
  return acc;
}

std::vector<Cyclotomic> values(const CharacterTable& t, const VirtualCharacter& phi) {
  const auto& forms = t.integer_forms();
  std::vector<Cyclotomic> out;
  out.reserve(t.num_classes());
  if (forms.empty()) {
    for (ClassId c = 0; c < t.num_classes(); ++c) out.push_back(value(t, phi, c));
    return out;
  }
  if (phi.coeffs.size() != t.num_irreducibles())
    throw Error(ErrorCode::InvalidArgument, "virtual character has wrong length");
  const std::int64_t e = t.exponent();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(e));
  for (ClassId c = 0; c < t.num_classes(); ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
      if (phi.coeffs[i] != 0)
        for (std::int64_t x = 0; x < e; ++x) acc[x] += phi.coeffs[i] * forms[i][c][x];
    std::vector<std::pair<Rational, std::int64_t>> terms;
    for (std::int64_t x = 0; x < e; ++x)
      if (acc[x] != 0) terms.emplace_back(Rational(acc[x]), x);
    out.push_back(Cyclotomic::from_terms(e, terms));
  }
  return out;
}

VirtualCharacter decompose(const CharacterTable& t, const std::vector<Cyclotomic>& class_fn) {
  const auto& forms = t.integer_forms();
  std::vector<std::vector<std::int64_t>> fn_forms;
  if (!forms.empty())
    for (const auto& v : class_fn) {
      if (t.exponent() % v.conductor() != 0) break;
      auto f = integer_exponent_form(v, t.exponent());
      if (!f) break;
      fn_forms.push_back(std::move(*f));
    }
  VirtualCharacter out;
  if (fn_forms.size() == class_fn.size() && !forms.empty()) {
    for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
      const auto ip = weighted_inner(fn_forms, forms[i], t.classes().sizes, t.exponent());
      for (std::size_t x = 1; x < ip.size(); ++x)
        if (ip[x] != 0) fail("decomposition", "inner product is irrational");
      if (ip[0] % t.order() != 0) fail("decomposition", "non-integral multiplicity");
      out.coeffs.push_back(ip[0] / t.order());
    }
    return out;
  }
  for (const auto& chi : t.irreducibles()) {
    Cyclotomic acc;
    for (ClassId c = 0; c < t.num_classes(); ++c)
      acc += class_fn[c] * chi[c].conj() * Rational(t.classes().sizes[c]);
    const auto r = acc.to_rational();
    if (!r) fail("decomposition", "inner product is irrational");
    const Rational coef = *r / t.order();
    if (!is_integer(coef)) fail("decomposition", "non-integral multiplicity");
    out.coeffs.push_back(coef.get_num().get_si());
  }
  return out;
}

std::vector<std::int64_t> multiplicities_from_values(const std::vector<Cyclotomic>& seq) {
  const auto m = static_cast<std::int64_t>(seq.size());
  std::int64_t n = m;
  for (const auto& v : seq) n = std::lcm(n, v.conductor());
  std::vector<Cyclotomic> lifted;
  lifted.reserve(seq.size());
  for (const auto& v : seq) lifted.push_back(v.lifted(n));
  const std::int64_t step = n / m;
  std::vector<std::int64_t> mult(static_cast<std::size_t>(m), 0);
  std::vector<std::pair<Rational, std::int64_t>> terms;
  for (std::int64_t j = 0; j < m; ++j) {
    // sum_k seq[k] * zeta_m^{-jk}, each product a shift by -jk*(n/m)
    terms.clear();
    for (std::int64_t k = 0; k < m; ++k) {
      const auto& cs = lifted[k].coeffs();
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (sgn(cs[i]) != 0) terms.emplace_back(cs[i], static_cast<std::int64_t>(i) - j * k * step);
    }
    const auto r = Cyclotomic::from_terms(n, terms).to_rational();
    if (!r) fail("restriction multiplicities", "irrational multiplicity");
    const Rational mj = *r / m;
    if (!is_integer(mj)) fail("restriction multiplicities", "non-integral multiplicity");
    mult[j] = mj.get_num().get_si();
  }
  return mult;
}

std::vector<std::int64_t> restrict_multiplicities(const CharacterTable& t,
                                                  const VirtualCharacter& phi, Elem s) {
  const GroupTable* g = t.group();
  if (!g) throw Error(ErrorCode::InvalidArgument, "element-level restriction on an unbound table");
  const std::int64_t m = g->element_order(s);
  std::vector<Cyclotomic> seq;
  seq.reserve(static_cast<std::size_t>(m));
  Elem y = g->identity();
  for (std::int64_t k = 0; k < m; ++k) {
    seq.push_back(value(t, phi, t.class_of(y)));
    y = g->mul(y, s);
  }
  return multiplicities_from_values(seq);
}

std::vector<std::int64_t> restrict_multiplicities_at_class(const CharacterTable& t,
                                                           const VirtualCharacter& phi,
                                                           ClassId c) {
  const std::int64_t m = t.classes().rep_orders[c];
  std::vector<Cyclotomic> seq;
  seq.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) seq.push_back(value(t, phi, t.classes().power_map[c][k]));
  return multiplicities_from_values(seq);
}

std::vector<std::int64_t> cached_multiplicities(const CharacterTable& t,
                                                const VirtualCharacter& phi, ClassId c) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(t.classes().rep_orders[c]), 0);
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
    if (phi.coeffs[i] == 0) continue;
    const auto& mi = t.irreducible_multiplicities(i, c);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += phi.coeffs[i] * mi[j];
  }
  return out;
}

CharacterTable table_for_group(std::shared_ptr<const GroupTable> g) {
  if (g->is_abelian()) return abelian_table(g);
  if (g->origin().kind == GroupOrigin::Kind::Metacyclic) {
    try {
      return metacyclic_table(g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TableValidation) throw;
    }
  }
  for (const auto& doc : builtin_table_documents()) {
    if (doc.at("order").get<std::int64_t>() != g->order()) continue;
    if (doc.at("classes").size() != g->classes().count()) continue;
    try {
      return bind_table(ingest_table(doc), g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TableValidation) throw;
    }
  }
  throw Error(ErrorCode::NoCharacterTable,
              "no built-in character table for " + g->descriptor() + "; supply one with --table");
}

}  // namespace stickel
