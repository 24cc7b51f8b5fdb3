#pragma once

#include "grpd/rational.hpp"

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace grpd {

/// Dense matrix over exact rationals. Zero-dimensional shapes (0xn, nx0)
/// are legal and behave as expected under multiplication.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator*(const QMat& o) const {
    assert(cols_ == o.rows_);
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o(k, j) != 0) r(i, j) += x * o(k, j);
        }
      }
    return r;
  }

  QMat operator+(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  QMat operator-(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  QMat operator*(const Rational& s) const {
    QMat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }

  QMat transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Copies `m` into this matrix with top-left corner at (i0, j0).
  void set_block(int i0, int j0, const QMat& m) {
    assert(i0 + m.rows() <= rows_ && j0 + m.cols() <= cols_);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) (*this)(i0 + i, j0 + j) = m(i, j);
  }

  QMat block(int i0, int j0, int r, int c) const {
    assert(i0 + r <= rows_ && j0 + c <= cols_);
    QMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pr = -1;
      for (int i = r; i < rows_; ++i)
        if ((*this)(i, c) != 0) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      if (pr != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(pr, j));
      Rational inv = Rational(1) / (*this)(r, c);
      for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rational factor = (*this)(i, c);
        for (int j = c; j < cols_; ++j) (*this)(i, j) -= factor * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    QMat tmp = *this;
    return static_cast<int>(tmp.rref().size());
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Columns form the canonical echelon basis of ker(A): the free column
/// coordinates carry an identity pattern, so selecting the free rows is an
/// exact left inverse of this matrix.
struct KernelBasis {
  QMat basis;              // A.cols x nullity
  std::vector<int> free;   // free column indices, one per basis column
};

inline KernelBasis kernel_basis(const QMat& a) {
  QMat r = a;
  std::vector<int> pivots = r.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  KernelBasis out;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) out.free.push_back(c);
  out.basis = QMat(a.cols(), static_cast<int>(out.free.size()));
  for (int k = 0; k < static_cast<int>(out.free.size()); ++k) {
    int fc = out.free[k];
    out.basis(fc, k) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      out.basis(pivots[i], k) = -r(i, fc);
  }
  return out;
}

/// Presentation of the quotient of Q^n by the column span of C: a projection
/// `proj` (q x n) with proj . C = 0 and a section `sect` (n x q) with
/// proj . sect = I. Canonical: built from the echelon form of C^T, so equal
/// inputs give identical presentations.
struct QuotientPresentation {
  QMat proj;
  QMat sect;
};

inline QuotientPresentation quotient_presentation(const QMat& c) {
  QMat r = c.transpose();
  std::vector<int> pivots = r.rref();
  std::vector<bool> is_pivot(c.rows(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free;
  for (int j = 0; j < c.rows(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  int q = static_cast<int>(free.size());
  QuotientPresentation out{QMat(q, c.rows()), QMat(c.rows(), q)};
  for (int k = 0; k < q; ++k) {
    out.proj(k, free[k]) = 1;
    out.sect(free[k], k) = 1;
    // e_pivot = -sum over free columns of its echelon coefficients
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      out.proj(k, pivots[i]) = -r(i, free[k]);
  }
  return out;
}

/// Solves A X = B exactly. Requires the system to be consistent and A to
/// have full column rank (unique solution); both are asserted.
inline QMat solve(const QMat& a, const QMat& b) {
  assert(a.rows() == b.rows());
  QMat aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  std::vector<int> pivots = aug.rref();
  QMat x(a.cols(), b.cols());
  int r = 0;
  for (int p : pivots) {
    if (p >= a.cols())
      throw theorem_violation("solve: inconsistent linear system");
    ++r;
  }
  if (r != a.cols())
    throw theorem_violation("solve: coefficient matrix not of full column rank");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  return x;
}

inline bool is_invertible(const QMat& a) {
  return a.rows() == a.cols() && a.rank() == a.rows();
}

inline QMat inverse(const QMat& a) {
  if (a.rows() != a.cols()) throw theorem_violation("inverse: matrix not square");
  return solve(a, QMat::identity(a.rows()));
}

}  // namespace grpd
