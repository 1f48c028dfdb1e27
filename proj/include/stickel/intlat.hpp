#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "stickel/cyclotomic.hpp"

namespace stickel {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer>& r);
  bool row_is_zero(std::size_t i) const;

  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// U*A*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const IntMatrix& A);

/// Row Hermite normal form: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are kept at the bottom, so the shape of
/// the input is preserved.
IntMatrix hermite_normal_form(const IntMatrix& A);

/// Z-basis (rows, in HNF) of {x in Z^rows(A) : (x*A)_j = 0 mod moduli_j}.
IntMatrix kernel_mod(const IntMatrix& A, const std::vector<Integer>& moduli);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& A);

/// Rank over Q.
std::size_t rank(const IntMatrix& A);

/// Drops zero rows.
IntMatrix nonzero_rows(const IntMatrix& A);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

}  // namespace stickel
