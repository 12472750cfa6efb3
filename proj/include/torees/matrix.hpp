#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torees/integer.hpp"

namespace torees {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows must all have length `cols`.
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidInput("matrix row has wrong length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> r;
    for (auto row : rows) r.push_back(make_vector(row));
    return from_rows(r, r.empty() ? 0 : r.front().size());
  }

  /// The vectors become the columns of the result.
  static IntegerMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> r;
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector operator*(const IntVector& v) const {
    IntVector r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  IntegerMatrix diagonal;  // D
  IntegerMatrix left;      // U, rows x rows
  IntegerMatrix right;     // V, cols x cols
  std::size_t rank = 0;

  Integer invariant(std::size_t i) const { return i < std::min(diagonal.rows(), diagonal.cols()) ? diagonal(i, i) : Integer(0); }
};

/// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    // pivot: smallest nonzero absolute value in the trailing block
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {{i, j}};
      if (!best) break;
      d.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide the whole trailing block
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row(t, *offender, 1);
      u.add_row(t, *offender, 1);
    }
    if (d(t, t) == 0) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(d), std::move(u), std::move(v), t};
}

/// Row-style Hermite normal form of the row span: echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped,
/// so the result is a basis of the lattice spanned by the input rows.
inline std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows_in, std::size_t cols) {
  IntegerMatrix h = IntegerMatrix::from_rows(rows_in, cols);
  const std::size_t rows = h.rows();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < rows; ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
        h.add_row(i, pivot_row, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) h.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pivot_row, c).get_mpz_t());
      h.add_row(i, pivot_row, -q);
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < pivot_row; ++i) basis.push_back(h.row(i));
  return basis;
}

inline std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols) {
  return hermite_basis(rows, cols).size();
}

/// Exact solution of a square nonsingular system over the rationals, or
/// nullopt when singular.
inline std::optional<std::vector<Rational>> solve_rational(const IntegerMatrix& a, const IntVector& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

inline Integer determinant(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det.get_num();
}

/// Adjugate of a square matrix: adj(A) * A = det(A) * I. Requires det != 0.
inline IntegerMatrix adjugate(const IntegerMatrix& a, const Integer& det) {
  const std::size_t n = a.rows();
  IntegerMatrix adj(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve_rational(a, unit_vector(n, j));
    if (!x) throw InvalidInput("adjugate of singular matrix");
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = (*x)[i] * det;
      adj(i, j) = v.get_num();
    }
  }
  return adj;
}

/// Inverse of a unimodular matrix.
inline IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  Integer det = determinant(a);
  if (abs(det) != 1) throw InvalidInput("matrix is not unimodular");
  IntegerMatrix adj = adjugate(a, det);
  if (det < 0)
    for (std::size_t i = 0; i < adj.rows(); ++i) adj.negate_row(i);
  return adj;
}

}  // namespace torees
