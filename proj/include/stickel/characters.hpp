#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "json.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/group.hpp"
#include "stickel/kernels.hpp"

namespace stickel {

/// Integer combination of the irreducibles of a table, indexed like
/// CharacterTable::irreducible().
struct VirtualCharacter {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;
};

/// Irreducible characters as class functions with cyclotomic values.
///
/// A table is either bound to a GroupTable (classes come from the group and
/// element-level operations are available) or stands alone with the class
/// data of an ingested document. Restriction multiplicities of every
/// irreducible to every cyclic subgroup <rep(c)> are computed once on
/// construction.
class CharacterTable {
 public:
  CharacterTable(ConjClassSet classes, std::vector<std::vector<Cyclotomic>> irreducibles,
                 std::shared_ptr<const GroupTable> group = nullptr);

  const GroupTable* group() const { return group_.get(); }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
  const ConjClassSet& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.count(); }
  std::size_t num_irreducibles() const { return irreducibles_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  ClassId identity_class() const { return identity_class_; }

  const std::vector<Cyclotomic>& irreducible(std::size_t i) const { return irreducibles_[i]; }
  const std::vector<std::vector<Cyclotomic>>& irreducibles() const { return irreducibles_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// Multiplicity vector (length rep_orders[c]) of irreducible i on <rep(c)>.
  const std::vector<std::int64_t>& irreducible_multiplicities(std::size_t i, ClassId c) const {
    return multiplicities_[i][c];
  }

  /// Values as integer exponent vectors at conductor exponent(), indexed
  /// [irreducible][class]; empty when some value is not integral.
  const std::vector<std::vector<std::vector<std::int64_t>>>& integer_forms() const {
    return forms_;
  }

  /// Class of an element; requires a bound group.
  ClassId class_of(Elem x) const;

 private:
  std::shared_ptr<const GroupTable> group_;
  ConjClassSet classes_;
  std::vector<std::vector<Cyclotomic>> irreducibles_;
  std::vector<std::int64_t> degrees_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  ClassId identity_class_ = 0;
  kernels::MultiplicityCube multiplicities_;
  std::vector<std::vector<std::vector<std::int64_t>>> forms_;
};

/// Degree-1 characters of an abelian group, trivial character first.
CharacterTable abelian_table(std::shared_ptr<const GroupTable> g);

/// Table of a from_metacyclic group by the little-group method: every orbit
/// of characters of <s> under t, with stabilizer <t^d>, contributes q/d
/// induced characters of degree d. Validated before it is returned; throws
/// TableValidation if the result is not a character table.
CharacterTable metacyclic_table(std::shared_ptr<const GroupTable> g);

/// Checks row orthogonality, sum of squared degrees, class-size sums, power
/// maps and their compatibility with the Galois action on values. Throws
/// Error(TableValidation) naming the violated relation.
void validate_table(const CharacterTable& t);
/// Same checks on raw class data and values; declared_order 0 skips the
/// order comparison.
void validate_table_data(const ConjClassSet& classes,
                         const std::vector<std::vector<Cyclotomic>>& irreducibles,
                         std::int64_t declared_order);

/// Column orthogonality (needs only class data); used as an extra check.
bool column_orthogonality_holds(const CharacterTable& t);

VirtualCharacter regular_character(const CharacterTable& t);
VirtualCharacter trivial_character(const CharacterTable& t);
VirtualCharacter irreducible_character(const CharacterTable& t, std::size_t i);

/// sum_i coeffs_i * chi_i(class)
Cyclotomic value(const CharacterTable& t, const VirtualCharacter& phi, ClassId c);
std::vector<Cyclotomic> values(const CharacterTable& t, const VirtualCharacter& phi);

/// Decomposes a class function into irreducible coordinates via the inner
/// product; throws TableValidation if a coordinate is not an integer.
VirtualCharacter decompose(const CharacterTable& t, const std::vector<Cyclotomic>& class_fn);

/// m_j = (1/m) sum_k phi(s^k) zeta_m^{-jk}, exact, along the powers of the
/// element s (bound table). Throws TableValidation on a non-integral m_j.
std::vector<std::int64_t> restrict_multiplicities(const CharacterTable& t,
                                                  const VirtualCharacter& phi, Elem s);
/// Same DFT along the power map of a class representative.
std::vector<std::int64_t> restrict_multiplicities_at_class(const CharacterTable& t,
                                                           const VirtualCharacter& phi,
                                                           ClassId c);
/// Linear combination of the cached irreducible multiplicities.
std::vector<std::int64_t> cached_multiplicities(const CharacterTable& t,
                                                const VirtualCharacter& phi, ClassId c);

/// Exact DFT over the value sequence v[k] = phi(s^k), shared by the routes
/// above and by the reference kernel.
std::vector<std::int64_t> multiplicities_from_values(const std::vector<Cyclotomic>& seq);

/// Table for the group: closed forms for abelian and metacyclic origins,
/// otherwise the built-in library (bound by class matching). Throws
/// NoCharacterTable when nothing applies.
CharacterTable table_for_group(std::shared_ptr<const GroupTable> g);

// ---- ingestion (table_io.cpp)

/// Parses and validates a character-table document:
///   {"order": n, "classes": [{"size":..,"rep_order":..}],
///    "power_map": [[class, k, class], ...] for 0 <= k < rep_order,
///    "characters": [[cyclotomic, ...], ...]}
CharacterTable ingest_table(const nlohmann::json& doc);
CharacterTable ingest_table_file(const std::string& path);

/// Matches the classes of a standalone table to those of g (sizes, orders,
/// power maps and class multiplication coefficients) and returns the table
/// re-indexed on g's classes. Throws TableValidation if no matching exists.
CharacterTable bind_table(const CharacterTable& standalone, std::shared_ptr<const GroupTable> g);

nlohmann::json table_to_json(const CharacterTable& t);

/// Built-in standalone tables (S3, D4, Q8, A4, S4).
const std::vector<nlohmann::json>& builtin_table_documents();

}  // namespace stickel
