#include "stickel/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "stickel/error.hpp"
#include "stickel/kernels.hpp"

namespace stickel {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t power_mod(std::int64_t b, std::int64_t k, std::int64_t m) {
  std::int64_t result = 1 % m;
  b = mod_floor(b, m);
  while (k > 0) {
    if (k & 1) result = result * b % m;
    b = b * b % m;
    k >>= 1;
  }
  return result;
}

bool prime_power(std::int64_t n, std::int64_t& p, std::int64_t& a) {
  if (n < 2) return false;
  for (p = 2; p * p <= n; ++p)
    if (n % p == 0) break;
  if (p * p > n) p = n;
  a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return n == 1;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvalidGroupSpec: return "invalid_group_spec";
    case ErrorCode::InvalidPermutation: return "invalid_permutation";
    case ErrorCode::ClosureCapExceeded: return "closure_cap_exceeded";
    case ErrorCode::InvalidMetacyclic: return "invalid_metacyclic";
    case ErrorCode::NotAbelian: return "not_abelian";
    case ErrorCode::TableValidation: return "table_validation";
    case ErrorCode::NoCharacterTable: return "no_character_table";
    case ErrorCode::KappaMismatch: return "kappa_mismatch";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

std::string_view to_string(Sylow2Class c) {
  switch (c) {
    case Sylow2Class::OddOrder: return "odd_order";
    case Sylow2Class::CyclicNontrivial: return "cyclic_nontrivial";
    case Sylow2Class::Noncyclic: return "noncyclic";
  }
  return "unknown";
}

ClassId ConjClassSet::identity_class() const {
  for (ClassId c = 0; c < count(); ++c)
    if (rep_orders[c] == 1) return c;
  throw Error(ErrorCode::TableValidation, "no identity class");
}

// ---------------------------------------------------------------- residues

ResidueGroup ResidueGroup::trivial(std::int64_t m) { return generated(m, {}); }

ResidueGroup ResidueGroup::full_units(std::int64_t m) {
  std::vector<std::int64_t> units;
  for (std::int64_t x = 0; x < m; ++x)
    if (std::gcd(x, m) == 1) units.push_back(x);
  if (m == 1) units = {0};
  return from_elements(m, std::move(units));
}

ResidueGroup ResidueGroup::generated(std::int64_t m, const std::vector<std::int64_t>& gens) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "residue modulus must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> elems{1 % m};
  seen[1 % m] = 1;
  std::vector<std::int64_t> reduced;
  for (auto g : gens) {
    const std::int64_t gg = mod_floor(g, m);
    if (std::gcd(gg, m) != 1 && m > 1)
      throw Error(ErrorCode::KappaMismatch,
                  "generator " + std::to_string(g) + " is not a unit mod " + std::to_string(m));
    reduced.push_back(gg);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto g : reduced) {
      const std::int64_t y = elems[i] * g % m;
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  return from_elements(m, std::move(elems));
}

ResidueGroup ResidueGroup::from_elements(std::int64_t m, std::vector<std::int64_t> elems) {
  ResidueGroup g;
  g.modulus_ = m;
  for (auto& x : elems) x = mod_floor(x, m);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  g.elements_ = std::move(elems);
  return g;
}

bool ResidueGroup::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), mod_floor(x, modulus_));
}

ResidueGroup ResidueGroup::image_mod(std::int64_t d) const {
  if (d < 1 || modulus_ % d != 0)
    throw Error(ErrorCode::InvalidArgument, "image_mod: target must divide the modulus");
  std::vector<std::int64_t> img;
  img.reserve(elements_.size());
  for (auto x : elements_) img.push_back(x % d);
  return from_elements(d, std::move(img));
}

ResidueGroup ResidueGroup::intersect(const ResidueGroup& other) const {
  if (other.modulus_ != modulus_)
    throw Error(ErrorCode::InvalidArgument, "intersect: modulus mismatch");
  std::vector<std::int64_t> out;
  std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                        other.elements_.end(), std::back_inserter(out));
  return from_elements(modulus_, std::move(out));
}

bool ResidueGroup::is_subgroup_of(const ResidueGroup& other) const {
  return modulus_ == other.modulus_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool ResidueGroup::is_closed() const {
  if (!contains(1 % modulus_)) return false;
  for (auto a : elements_) {
    if (std::gcd(a, modulus_) != 1 && modulus_ > 1) return false;
    for (auto b : elements_)
      if (!contains(a * b % modulus_)) return false;
  }
  return true;
}

std::vector<std::int64_t> ResidueGroup::generators() const {
  std::vector<std::int64_t> gens;
  ResidueGroup span = trivial(modulus_);
  for (auto x : elements_) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated(modulus_, gens);
  }
  return gens;
}

// ---------------------------------------------------------------- groups

GroupTable::GroupTable(CayleyTable table, GroupOrigin origin)
    : cayley_(std::move(table)), origin_(std::move(origin)) {
  const std::uint32_t n = cayley_.n;
  orders_ = kernels::element_orders(cayley_);
  exponent_ = 1;
  for (auto o : orders_) exponent_ = std::lcm(exponent_, o);

  const std::vector<Elem> minima = kernels::class_minima(cayley_);
  std::vector<ClassId> id_of_min(n, 0);
  ClassId next = 0;
  for (Elem x = 0; x < n; ++x)
    if (minima[x] == x) {
      id_of_min[x] = next++;
      classes_.reps.push_back(x);
    }
  classes_.class_of.resize(n);
  classes_.sizes.assign(next, 0);
  for (Elem x = 0; x < n; ++x) {
    classes_.class_of[x] = id_of_min[minima[x]];
    ++classes_.sizes[classes_.class_of[x]];
  }
  for (ClassId c = 0; c < next; ++c) {
    const Elem rep = classes_.reps[c];
    const std::int64_t m = orders_[rep];
    classes_.rep_orders.push_back(m);
    std::vector<ClassId> pm;
    pm.reserve(static_cast<std::size_t>(m));
    Elem y = cayley_.identity;
    for (std::int64_t k = 0; k < m; ++k) {
      pm.push_back(classes_.class_of[y]);
      y = cayley_.product(y, rep);
    }
    classes_.power_map.push_back(std::move(pm));
  }
}

Elem GroupTable::pow(Elem x, std::int64_t k) const {
  const std::int64_t m = orders_[x];
  k = mod_floor(k, m);
  Elem y = cayley_.identity;
  for (std::int64_t i = 0; i < k; ++i) y = cayley_.product(y, x);
  return y;
}

bool GroupTable::is_abelian() const { return classes_.count() == cayley_.n; }

GroupTable GroupTable::from_abelian(const std::vector<std::int64_t>& invariants) {
  std::int64_t n = 1;
  for (auto d : invariants) {
    if (d < 2)
      throw Error(ErrorCode::InvalidGroupSpec, "abelian invariants must be >= 2, got " +
                                                   std::to_string(d));
    n *= d;
    if (n > 1'000'000) throw Error(ErrorCode::InvalidGroupSpec, "abelian group too large");
  }
  CayleyTable t;
  t.n = static_cast<std::uint32_t>(n);
  t.mul.assign(static_cast<std::size_t>(n * n), 0);
  t.inv.assign(static_cast<std::size_t>(n), 0);
  const std::size_t k = invariants.size();
  auto coords = [&](std::int64_t x) {
    std::vector<std::int64_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = x % invariants[i];
      x /= invariants[i];
    }
    return c;
  };
  auto index = [&](const std::vector<std::int64_t>& c) {
    std::int64_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * invariants[i] + c[i];
    return x;
  };
  std::vector<std::vector<std::int64_t>> all(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) all[x] = coords(x);
  std::vector<std::int64_t> c(k);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) c[i] = (all[a][i] + all[b][i]) % invariants[i];
      t.mul[a * n + b] = static_cast<Elem>(index(c));
    }
    for (std::size_t i = 0; i < k; ++i) c[i] = mod_floor(-all[a][i], invariants[i]);
    t.inv[a] = static_cast<Elem>(index(c));
  }
  GroupOrigin origin;
  origin.kind = GroupOrigin::Kind::Abelian;
  origin.invariants = invariants;
  origin.descriptor = "abelian:";
  for (std::size_t i = 0; i < k; ++i)
    origin.descriptor += (i ? "," : "") + std::to_string(invariants[i]);
  return GroupTable(std::move(t), std::move(origin));
}

GroupTable GroupTable::from_metacyclic(std::int64_t pa, std::int64_t q, std::int64_t r) {
  std::int64_t p = 0, a = 0;
  if (!prime_power(pa, p, a))
    throw Error(ErrorCode::InvalidMetacyclic,
                "metacyclic: pa = " + std::to_string(pa) + " is not a prime power");
  if (q < 1) throw Error(ErrorCode::InvalidMetacyclic, "metacyclic: q must be >= 1");
  if (std::gcd(mod_floor(r, pa), pa) != 1)
    throw Error(ErrorCode::InvalidMetacyclic, "metacyclic: r is not a unit mod pa");
  if (power_mod(r, q, pa) != 1)
    throw Error(ErrorCode::InvalidMetacyclic, "metacyclic: r^q != 1 mod pa");
  for (std::int64_t d = 1; d < q; ++d)
    if (power_mod(r, d, pa) == 1)
      throw Error(ErrorCode::InvalidMetacyclic, "metacyclic: multiplicative order of r mod pa is " +
                                                    std::to_string(d) + ", not q");
  const std::int64_t n = pa * q;
  if (n > 1'000'000) throw Error(ErrorCode::InvalidGroupSpec, "metacyclic group too large");
  std::vector<std::int64_t> rpow(static_cast<std::size_t>(q));
  for (std::int64_t j = 0; j < q; ++j) rpow[j] = power_mod(r, j, pa);

  // s^i t^j at index i + pa*j;  t^j s^k = s^(k r^j) t^j.
  CayleyTable t;
  t.n = static_cast<std::uint32_t>(n);
  t.mul.assign(static_cast<std::size_t>(n * n), 0);
  t.inv.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t x = 0; x < n; ++x) {
    const std::int64_t i = x % pa, j = x / pa;
    for (std::int64_t y = 0; y < n; ++y) {
      const std::int64_t k = y % pa, l = y / pa;
      const std::int64_t ni = (i + k * rpow[j]) % pa;
      const std::int64_t nj = (j + l) % q;
      t.mul[x * n + y] = static_cast<Elem>(ni + pa * nj);
    }
  }
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (t.mul[x * n + y] == 0) {
        t.inv[x] = static_cast<Elem>(y);
        break;
      }
  GroupOrigin origin;
  origin.kind = GroupOrigin::Kind::Metacyclic;
  origin.pa = pa;
  origin.p = p;
  origin.a = a;
  origin.q = q;
  origin.r = mod_floor(r, pa);
  origin.descriptor = "metacyclic:" + std::to_string(pa) + "," + std::to_string(q) + "," +
                      std::to_string(origin.r);
  return GroupTable(std::move(t), std::move(origin));
}

GroupTable GroupTable::from_permutations(std::size_t degree,
                                         const std::vector<std::vector<std::uint32_t>>& gens,
                                         std::size_t cap) {
  using Perm = std::vector<std::uint32_t>;
  for (const auto& g : gens) {
    if (g.size() != degree)
      throw Error(ErrorCode::InvalidPermutation, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v])
        throw Error(ErrorCode::InvalidPermutation, "generator is not a permutation");
      hit[v] = 1;
    }
  }
  auto compose = [degree](const Perm& x, const Perm& y) {  // x after y
    Perm z(degree);
    for (std::size_t i = 0; i < degree; ++i) z[i] = x[y[i]];
    return z;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm y = compose(elems[i], g);
      if (index.contains(y)) continue;
      if (elems.size() >= cap)
        throw Error(ErrorCode::ClosureCapExceeded,
                    "permutation closure exceeds cap of " + std::to_string(cap) + " elements");
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  const auto n = static_cast<std::uint32_t>(elems.size());
  CayleyTable t;
  t.n = n;
  t.mul.assign(static_cast<std::size_t>(n) * n, 0);
  t.inv.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem c = index.at(compose(elems[a], elems[b]));
      t.mul[static_cast<std::size_t>(a) * n + b] = c;
      if (c == 0) t.inv[a] = b;
    }
  GroupOrigin origin;
  origin.kind = GroupOrigin::Kind::Permutation;
  origin.descriptor = "perm:" + std::to_string(degree);
  return GroupTable(std::move(t), std::move(origin));
}

GroupTable GroupTable::direct_product(const GroupTable& g, const GroupTable& h) {
  const std::uint64_t n64 = static_cast<std::uint64_t>(g.order()) * h.order();
  if (n64 > 1'000'000) throw Error(ErrorCode::InvalidGroupSpec, "direct product too large");
  const auto n = static_cast<std::uint32_t>(n64);
  const std::uint32_t nh = h.order();
  CayleyTable t;
  t.n = n;
  t.mul.assign(static_cast<std::size_t>(n) * n, 0);
  t.inv.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y)
      t.mul[static_cast<std::size_t>(x) * n + y] =
          g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
    t.inv[x] = g.inv(x / nh) * nh + h.inv(x % nh);
  }
  t.identity = g.identity() * nh + h.identity();
  GroupOrigin origin;
  origin.kind = GroupOrigin::Kind::DirectProduct;
  origin.descriptor = g.descriptor() + " x " + h.descriptor();
  return GroupTable(std::move(t), std::move(origin));
}

GroupTable GroupTable::from_cayley(CayleyTable table, GroupOrigin origin) {
  if (table.mul.size() != static_cast<std::size_t>(table.n) * table.n ||
      table.inv.size() != table.n || !check_group_axioms(table))
    throw Error(ErrorCode::InvalidGroupSpec, "Cayley table violates the group axioms");
  return GroupTable(std::move(table), std::move(origin));
}

std::int64_t element_order(const GroupTable& g, Elem x) { return g.element_order(x); }
std::int64_t exponent(const GroupTable& g) { return g.exponent(); }
const ConjClassSet& conjugacy_classes(const GroupTable& g) { return g.classes(); }

ClassId power_class(const ConjClassSet& classes, ClassId c, std::int64_t k) {
  const std::int64_t m = classes.rep_orders.at(c);
  return classes.power_map[c][mod_floor(k, m)];
}

ResidueGroup normalizer_mu(const GroupTable& g, Elem s) {
  const std::int64_t m = g.element_order(s);
  if (m == 1) return ResidueGroup::trivial(1);
  std::vector<std::int64_t> exp_of(g.order(), -1);
  Elem y = g.identity();
  for (std::int64_t k = 0; k < m; ++k) {
    exp_of[y] = k;
    y = g.mul(y, s);
  }
  std::vector<std::int64_t> mu;
  for (Elem t = 0; t < g.order(); ++t) {
    const Elem c = g.mul(g.mul(t, s), g.inv(t));
    if (exp_of[c] >= 0) mu.push_back(exp_of[c]);
  }
  return ResidueGroup::from_elements(m, std::move(mu));
}

Sylow2Class sylow2_class(const GroupTable& g) {
  std::int64_t n = g.order();
  if (n % 2 != 0) return Sylow2Class::OddOrder;
  std::int64_t two_part = 1;
  while (n % 2 == 0) {
    n /= 2;
    two_part *= 2;
  }
  for (auto o : g.element_orders())
    if (o % two_part == 0) return Sylow2Class::CyclicNontrivial;
  return Sylow2Class::Noncyclic;
}

int regular_sign(const GroupTable& g, Elem s) {
  const std::uint32_t n = g.order();
  std::vector<char> seen(n, 0);
  std::size_t cycles = 0;
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (Elem y = x; !seen[y]; y = g.mul(s, y)) seen[y] = 1;
  }
  return (n - cycles) % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> abelianization(const GroupTable& g) {
  const std::uint32_t n = g.order();
  // Commutator subgroup: closure of all commutators.
  std::vector<char> in_n(n, 0);
  std::vector<Elem> gens;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!in_n[c]) {
        in_n[c] = 1;
        gens.push_back(c);
      }
    }
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x)
    if (in_n[x]) members.push_back(x);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem c : gens) {
      const Elem y = g.mul(members[i], c);
      if (!in_n[y]) {
        in_n[y] = 1;
        members.push_back(y);
      }
    }
  const std::int64_t n_size = static_cast<std::int64_t>(members.size());
  const std::int64_t quotient = n / n_size;

  // Coset orders: least k with x^k in [G,G].
  std::vector<std::int64_t> coset_order(n, 1);
  for (Elem x = 0; x < n; ++x) {
    Elem y = x;
    std::int64_t k = 1;
    while (!in_n[y]) {
      y = g.mul(y, x);
      ++k;
    }
    coset_order[x] = k;
  }

  // For each prime p: #cosets of order dividing p^k is p^(sum_i min(lambda_i, k)).
  std::vector<std::vector<std::int64_t>> parts;  // per prime, descending partition as p-powers
  std::int64_t rest = quotient;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::int64_t vp = 0;
    while (rest % p == 0) {
      rest /= p;
      ++vp;
    }
    std::vector<std::int64_t> s{0};  // s[k] = log_p(count_k)
    for (std::int64_t k = 1, pk = p; s.back() < vp; ++k, pk *= p) {
      std::int64_t count = 0;
      for (Elem x = 0; x < n; ++x)
        if (pk % coset_order[x] == 0) ++count;
      count /= n_size;
      std::int64_t e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      s.push_back(e);
    }
    // Number of parts >= k is s[k] - s[k-1].
    std::vector<std::int64_t> at_least;
    for (std::size_t k = 1; k < s.size(); ++k) at_least.push_back(s[k] - s[k - 1]);
    const std::int64_t nparts = at_least.empty() ? 0 : at_least.front();
    std::vector<std::int64_t> powers(static_cast<std::size_t>(nparts), 1);
    for (std::size_t k = 0; k < at_least.size(); ++k)
      for (std::int64_t i = 0; i < at_least[k]; ++i) powers[i] *= p;
    parts.push_back(std::move(powers));  // descending
  }
  std::size_t len = 0;
  for (const auto& v : parts) len = std::max(len, v.size());
  std::vector<std::int64_t> factors(len, 1);
  for (const auto& v : parts)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool check_group_axioms(const CayleyTable& t, std::size_t exhaustive_limit,
                        std::size_t random_triples, std::uint64_t seed) {
  const std::uint32_t n = t.n;
  if (t.identity >= n) return false;
  for (auto v : t.mul)
    if (v >= n) return false;
  for (Elem x = 0; x < n; ++x) {
    if (t.product(t.identity, x) != x || t.product(x, t.identity) != x) return false;
    if (t.inv[x] >= n || t.product(x, t.inv[x]) != t.identity ||
        t.product(t.inv[x], x) != t.identity)
      return false;
  }
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::size_t i = 0; i < random_triples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (t.product(t.product(a, b), c) != t.product(a, t.product(b, c))) return false;
  }
  return true;
}

}  // namespace stickel
