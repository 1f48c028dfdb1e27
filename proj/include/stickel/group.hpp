#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace stickel {

using Elem = std::uint32_t;
using ClassId = std::uint32_t;

/// Raw multiplication data: mul[a * n + b] = a*b.
struct CayleyTable {
  std::uint32_t n = 1;
  std::vector<Elem> mul{0};
  std::vector<Elem> inv{0};
  Elem identity = 0;

  Elem product(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

/// How a group was built; drives the closed-form character tables.
struct GroupOrigin {
  enum class Kind { Abelian, Metacyclic, Permutation, DirectProduct, Table };
  Kind kind = Kind::Table;
  std::string descriptor;
  std::vector<std::int64_t> invariants;  // Abelian: cyclic factor orders
  std::int64_t pa = 0, p = 0, a = 0, q = 0, r = 0;  // Metacyclic: s^pa = t^q = 1, tst^-1 = s^r
};

/// Conjugacy classes with deterministic representatives (least element index)
/// and power maps power_map[c][k] = class of rep(c)^k, 0 <= k < rep_orders[c].
struct ConjClassSet {
  std::vector<ClassId> class_of;  // empty when classes come from an ingested table
  std::vector<Elem> reps;         // empty when classes come from an ingested table
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> rep_orders;
  std::vector<std::vector<ClassId>> power_map;

  std::size_t count() const { return sizes.size(); }
  ClassId identity_class() const;
};

/// Subgroup of (Z/mZ)^x, stored as sorted residues in [0, m). The modulus 1
/// group is {0}.
class ResidueGroup {
 public:
  ResidueGroup() : modulus_(1), elements_{0} {}

  static ResidueGroup trivial(std::int64_t m);
  static ResidueGroup full_units(std::int64_t m);
  /// Closure of gens (each coprime to m) under multiplication mod m.
  static ResidueGroup generated(std::int64_t m, const std::vector<std::int64_t>& gens);
  /// Trusts that elems is closed; sorts and dedups.
  static ResidueGroup from_elements(std::int64_t m, std::vector<std::int64_t> elems);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::int64_t x) const;

  /// Reduction mod d for d | modulus.
  ResidueGroup image_mod(std::int64_t d) const;
  ResidueGroup intersect(const ResidueGroup& other) const;
  bool is_subgroup_of(const ResidueGroup& other) const;
  bool is_closed() const;
  /// Greedy generating set: ascending scan, keep x unless already generated.
  std::vector<std::int64_t> generators() const;

  friend bool operator==(const ResidueGroup&, const ResidueGroup&) = default;

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> elements_;
};

enum class Sylow2Class { OddOrder, CyclicNontrivial, Noncyclic };
std::string_view to_string(Sylow2Class c);

/// Finite group given by its Cayley table. Element orders and conjugacy
/// classes are computed once at construction.
class GroupTable {
 public:
  static constexpr std::size_t kDefaultClosureCap = 5000;

  static GroupTable from_abelian(const std::vector<std::int64_t>& invariants);
  static GroupTable from_metacyclic(std::int64_t pa, std::int64_t q, std::int64_t r);
  /// Permutations on {0..degree-1} as image vectors.
  static GroupTable from_permutations(std::size_t degree,
                                      const std::vector<std::vector<std::uint32_t>>& gens,
                                      std::size_t cap = kDefaultClosureCap);
  static GroupTable direct_product(const GroupTable& g, const GroupTable& h);
  /// Validates the group axioms before accepting the table.
  static GroupTable from_cayley(CayleyTable table, GroupOrigin origin);

  std::uint32_t order() const { return cayley_.n; }
  Elem identity() const { return cayley_.identity; }
  Elem mul(Elem a, Elem b) const { return cayley_.product(a, b); }
  Elem inv(Elem a) const { return cayley_.inv[a]; }
  Elem pow(Elem x, std::int64_t k) const;
  const CayleyTable& cayley() const { return cayley_; }
  const GroupOrigin& origin() const { return origin_; }
  const std::string& descriptor() const { return origin_.descriptor; }
  void set_descriptor(std::string d) { origin_.descriptor = std::move(d); }

  std::int64_t element_order(Elem x) const { return orders_[x]; }
  const std::vector<std::int64_t>& element_orders() const { return orders_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_abelian() const;

  const ConjClassSet& classes() const { return classes_; }
  ClassId class_of(Elem x) const { return classes_.class_of[x]; }

 private:
  GroupTable(CayleyTable table, GroupOrigin origin);

  CayleyTable cayley_;
  GroupOrigin origin_;
  std::vector<std::int64_t> orders_;
  std::int64_t exponent_ = 1;
  ConjClassSet classes_;
};

std::int64_t element_order(const GroupTable& g, Elem x);
std::int64_t exponent(const GroupTable& g);
const ConjClassSet& conjugacy_classes(const GroupTable& g);

/// Class of rep(c)^k; k may be negative.
ClassId power_class(const ConjClassSet& classes, ClassId c, std::int64_t k);

/// Image of N_G(<s>) in Aut<s> = (Z/mZ)^x, m = order(s), recorded from
/// t s t^-1 = s^r. The identity gives the trivial group mod 1.
ResidueGroup normalizer_mu(const GroupTable& g, Elem s);

Sylow2Class sylow2_class(const GroupTable& g);

/// Sign of x -> s*x on G, by cycle decomposition.
int regular_sign(const GroupTable& g, Elem s);

/// Invariant factors d_1 | d_2 | ... (all >= 2) of G/[G,G].
std::vector<std::int64_t> abelianization(const GroupTable& g);

/// Associativity on all triples up to exhaustive_limit elements, random
/// triples above; identity and inverse laws exhaustively.
bool check_group_axioms(const CayleyTable& t, std::size_t exhaustive_limit = 64,
                        std::size_t random_triples = 100000, std::uint64_t seed = 1);

/// Parses "(1 2)(3 4)" style cycle products (1-based points) into an image
/// vector on {0..degree-1}.
std::vector<std::uint32_t> parse_permutation(std::size_t degree, const std::string& text);

/// Group descriptor grammar, whitespace-insensitive:
///   abelian:<n1>,<n2>,...     (empty list = trivial group)
///   metacyclic:<pa>,<q>,<r>
///   perm:<degree>:<gen>,<gen>,...   each gen a cycle product like (1 2)(3 4)
/// and direct products "<spec> x <spec>". The closure cap for perm groups
/// defaults to STICKEL_CLOSURE_CAP when set.
GroupTable parse_group_spec(const std::string& spec, std::size_t cap = 0);

/// Closure cap from STICKEL_CLOSURE_CAP, or the default.
std::size_t closure_cap_from_env();

}  // namespace stickel
