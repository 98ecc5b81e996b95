#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "isopair/error.hpp"

namespace isopair {

/// Dense row-major matrix over a ring R. R must provide is_zero(),
/// zero_like() and one_like(); Scalar and Laurent both do.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix zeros(std::size_t n, const R& like) { return Matrix(n, n, like.zero_like()); }
  static Matrix identity(std::size_t n, const R& like) {
    Matrix m(n, n, like.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = like.one_like();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  /// Side length of a square matrix.
  std::size_t n() const {
    if (!square()) throw DimensionError("matrix is not square");
    return rows_;
  }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, rows_ && cols_ ? (*this)(0, 0).zero_like() : R{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<R> diagonal() const {
    std::vector<R> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) throw DimensionError("mat_mul: empty operand");
  Matrix<R> c(a.rows(), b.cols(), a(0, 0).zero_like());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const R& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  return mat_mul(a, b);
}

template <class R>
Matrix<R> operator+(Matrix<R> a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class R>
Matrix<R> operator-(Matrix<R> a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

// Zero-pattern predicates, 0-based: antitriangular patterns use i+j against n-1.

template <class R, class Zero>
bool zero_pattern(const Matrix<R>& m, Zero&& must_be_zero) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (must_be_zero(i, j) && !m(i, j).is_zero()) return false;
  return true;
}

template <class R>
bool is_lower_triangular(const Matrix<R>& m) {
  return m.square() && zero_pattern(m, [](std::size_t i, std::size_t j) { return j > i; });
}
template <class R>
bool is_upper_triangular(const Matrix<R>& m) {
  return m.square() && zero_pattern(m, [](std::size_t i, std::size_t j) { return j < i; });
}
/// Entry (i,j) = 0 whenever i+j < n+1 in 1-based indexing.
template <class R>
bool is_lower_antitriangular(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  return m.square() && zero_pattern(m, [n](std::size_t i, std::size_t j) { return i + j + 1 < n; });
}
/// Entry (i,j) = 0 whenever i+j > n+1 in 1-based indexing.
template <class R>
bool is_upper_antitriangular(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  return m.square() && zero_pattern(m, [n](std::size_t i, std::size_t j) { return i + j + 1 > n; });
}

/// Inverse of a triangular matrix whose diagonal entries are invertible in R.
/// Works over Laurent polynomials as long as the diagonal consists of units.
template <class R>
Matrix<R> triangular_inverse(const Matrix<R>& m) {
  const std::size_t n = m.n();
  const bool lower = is_lower_triangular(m);
  if (!lower && !is_upper_triangular(m)) throw PreconditionError("triangular_inverse: matrix is not triangular");
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i).is_zero()) throw SingularMatrix(i);
  Matrix<R> inv = Matrix<R>::zeros(n, m(0, 0));
  // Solve m * X = I column by column by substitution.
  for (std::size_t c = 0; c < n; ++c) {
    if (lower) {
      for (std::size_t i = c; i < n; ++i) {
        R acc = i == c ? m(0, 0).one_like() : m(0, 0).zero_like();
        for (std::size_t k = c; k < i; ++k)
          if (!m(i, k).is_zero()) acc -= m(i, k) * inv(k, c);
        inv(i, c) = acc / m(i, i);
      }
    } else {
      for (std::size_t ii = c + 1; ii-- > 0;) {
        R acc = ii == c ? m(0, 0).one_like() : m(0, 0).zero_like();
        for (std::size_t k = ii + 1; k <= c; ++k)
          if (!m(ii, k).is_zero()) acc -= m(ii, k) * inv(k, c);
        inv(ii, c) = acc / m(ii, ii);
      }
    }
  }
  return inv;
}

}  // namespace isopair
