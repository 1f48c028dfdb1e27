#include "stickel/intlat.hpp"

#include <algorithm>
#include <utility>

#include "stickel/error.hpp"

namespace stickel {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  for (const auto& r : init) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  entries_.insert(entries_.end(), r.begin(), r.end());
  ++rows_;
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t r = A.rows();
  const std::size_t c = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (D(i, j) != 0 && (pi == r || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == r) break;
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = floor_div(D(i, t), D(t, t));
        sub_row(D, i, t, q);
        sub_row(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = floor_div(D(t, j), D(t, t));
        sub_col(D, j, t, q);
        sub_col(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold a row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            sub_row(D, t, i, -1);
            sub_row(U, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

IntMatrix hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  const std::size_t r = H.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < r; ++col) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i)
        if (H(i, col) != 0 && (best == r || abs(H(i, col)) < abs(H(best, col)))) best = i;
      if (best == r) break;
      swap_rows(H, row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (H(i, col) == 0) continue;
        sub_row(H, i, row, floor_div(H(i, col), H(row, col)));
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) negate_row(H, row);
    for (std::size_t i = 0; i < row; ++i) sub_row(H, i, row, floor_div(H(i, col), H(row, col)));
    ++row;
  }
  return H;
}

IntMatrix kernel_mod(const IntMatrix& A, const std::vector<Integer>& moduli) {
  const std::size_t r = A.rows();
  const std::size_t c = A.cols();
  if (moduli.size() != c)
    throw Error(ErrorCode::InvalidArgument, "kernel_mod: moduli length must equal cols(A)");
  for (const auto& m : moduli)
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "kernel_mod: moduli must be positive");

  // [ A  I ]
  // [ D  0 ]  with D = diag(moduli); rows of the HNF with a zero left block
  // carry the kernel in their right block.
  IntMatrix B(r + c, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) B(i, j) = A(i, j);
    B(i, c + i) = 1;
  }
  for (std::size_t j = 0; j < c; ++j) B(r + j, j) = moduli[j];
  const IntMatrix H = hermite_normal_form(B);

  IntMatrix K(r, r);
  std::size_t out = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < c && left_zero; ++j) left_zero = H(i, j) == 0;
    if (!left_zero) continue;
    if (out == r) throw Error(ErrorCode::InvalidArgument, "kernel_mod: unexpected rank");
    for (std::size_t j = 0; j < r; ++j) K(out, j) = H(i, c + j);
    ++out;
  }
  if (out != r) throw Error(ErrorCode::InvalidArgument, "kernel_mod: kernel not of full rank");
  return K;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(M, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = v;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& A) {
  const IntMatrix H = hermite_normal_form(A);
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i)
    if (!H.row_is_zero(i)) ++r;
  return r;
}

IntMatrix nonzero_rows(const IntMatrix& A) {
  IntMatrix out(0, A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (!A.row_is_zero(i)) out.append_row(A.row(i));
  return out;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "matrix must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(integer_from_json(v));
    m.append_row(r);
  }
  return m;
}

}  // namespace stickel
