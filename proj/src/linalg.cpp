#include "isopair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace isopair {

namespace {

bool exact_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

bool float_less(const Scalar& a, const Scalar& b) {
  auto x = a.to_complex(), y = b.to_complex();
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

bool all_exact(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_exact(); });
}

Mode matrix_mode(const ScalarMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_exact()) return Mode::Float;
  return Mode::Exact;
}

// Row reduction to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m) {
  const bool exact = matrix_mode(m) == Mode::Exact;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  double scale = 0.0;
  if (!exact)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) scale = std::max(scale, m(i, j).abs());
  const double eps = exact ? 0.0 : 1e-11 * std::max(1.0, scale);
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_abs = 0.0;
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (exact) {
        if (!m(i, col).is_zero()) {
          best = i;
          break;
        }
      } else if (m(i, col).abs() > std::max(best_abs, eps)) {
        best = i;
        best_abs = m(i, col).abs();
      }
    }
    if (best == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    Scalar piv = m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool Multiset::equals_exact(const Multiset& other) const {
  if (size() != other.size()) return false;
  if (!all_exact(elements) || !all_exact(other.elements)) return false;
  auto a = elements, b = other.elements;
  std::sort(a.begin(), a.end(), exact_less);
  std::sort(b.begin(), b.end(), exact_less);
  return a == b;
}

bool Multiset::equals_approx(const Multiset& other, double tol) const {
  if (size() != other.size()) return false;
  std::vector<bool> used(other.size(), false);
  // Repeatedly take the globally closest unmatched pair.
  std::vector<bool> left_used(size(), false);
  for (std::size_t round = 0; round < size(); ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = size(), bj = size();
    for (std::size_t i = 0; i < size(); ++i) {
      if (left_used[i]) continue;
      for (std::size_t j = 0; j < other.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(elements[i].to_complex() - other.elements[j].to_complex());
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (!approx_equal(elements[bi], other.elements[bj], tol)) return false;
    left_used[bi] = true;
    used[bj] = true;
  }
  return true;
}

bool Multiset::equals(const Multiset& other, double tol) const {
  if (all_exact(elements) && all_exact(other.elements)) return equals_exact(other);
  return equals_approx(other, tol);
}

Multiset Multiset::sorted() const {
  Multiset s = *this;
  if (all_exact(s.elements)) {
    std::sort(s.elements.begin(), s.elements.end(), exact_less);
  } else {
    std::sort(s.elements.begin(), s.elements.end(), float_less);
  }
  return s;
}

ScalarMatrix scalar_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  ScalarMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0, Scalar());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) throw DimensionError("ragged matrix initializer");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

ScalarMatrix cast(const ScalarMatrix& m, Mode mode) {
  ScalarMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).as_mode(mode);
  return r;
}

ScalarMatrix mat_inverse(const ScalarMatrix& a) {
  const std::size_t n = a.n();
  if (n == 0) throw DimensionError("mat_inverse: empty matrix");
  const bool exact = matrix_mode(a) == Mode::Exact;
  ScalarMatrix m = a;
  ScalarMatrix inv = ScalarMatrix::identity(n, a(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0.0;
    for (std::size_t i = col; i < n; ++i) {
      if (exact) {
        if (!m(i, col).is_zero()) {
          piv = i;
          break;
        }
      } else if (m(i, col).abs() > best) {
        best = m(i, col).abs();
        piv = i;
      }
    }
    if (piv == n) throw SingularMatrix(col);
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    Scalar p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar determinant(const ScalarMatrix& a) {
  const std::size_t n = a.n();
  if (n == 0) return Scalar(1);
  ScalarMatrix m = a;
  Scalar prev = a(0, 0).one_like();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return a(0, 0).zero_like();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Multiset triangular_spectrum(const ScalarMatrix& a) {
  if (!is_lower_triangular(a) && !is_upper_triangular(a))
    throw PreconditionError("triangular_spectrum: matrix is neither lower nor upper triangular");
  return Multiset{a.diagonal()};
}

Multiset numeric_spectrum(const ScalarMatrix& a) {
  const std::size_t n = a.n();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("numeric_spectrum: QR iteration did not converge");
  Multiset out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.elements.emplace_back(solver.eigenvalues()(i));
  return out;
}

std::size_t rank(const ScalarMatrix& a) {
  ScalarMatrix m = a;
  return rref(m).size();
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& a) {
  ScalarMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  const Scalar zero = a.rows() && a.cols() ? a(0, 0).zero_like() : Scalar();
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), zero);
    v[free] = zero.one_like();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.n();
  if (b.size() != n) throw DimensionError("solve: right-hand side length mismatch");
  ScalarMatrix aug(n, n + 1, a(0, 0).zero_like());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i) throw SingularMatrix(i);
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& a, const std::vector<Scalar>& x) {
  if (x.size() != a.cols()) throw DimensionError("mat_vec: length mismatch");
  std::vector<Scalar> y(a.rows(), a.rows() && a.cols() ? a(0, 0).zero_like() : Scalar());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& a) {
  const std::size_t n = a.n();
  const Scalar one = a(0, 0).one_like();
  std::vector<Scalar> c(n + 1, one.zero_like());
  c[n] = one;
  ScalarMatrix mk = ScalarMatrix::zeros(n, one);
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    mk = mat_mul(a, shifted);
    Scalar tr = one.zero_like();
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

bool is_lower_triangular(const ScalarMatrix& a, double tol) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j).abs() > tol) return false;
  return true;
}

bool is_upper_triangular(const ScalarMatrix& a, double tol) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j).abs() > tol) return false;
  return true;
}

bool approx_equal(const ScalarMatrix& a, const ScalarMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix to_z(const IntMatrix& m) {
  ZMatrix z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) z[i].emplace_back(v);
  return z;
}

// Bareiss elimination with row swaps; returns rank.
std::size_t bareiss_rank(ZMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

ScalarMatrix to_scalar(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  ScalarMatrix s(rows, cols, Scalar());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) s(i, j) = Scalar(m[i][j]);
  return s;
}

long to_long_checked(const mpq_class& q) {
  if (q.get_den() != 1) throw InternalError("expected an integral value, got " + rational_string(q));
  if (!q.get_num().fits_slong_p()) throw InternalError("integer overflow");
  return q.get_num().get_si();
}

}  // namespace

std::size_t integer_rank(const IntMatrix& m) { return bareiss_rank(to_z(m)); }

std::vector<std::vector<long>> left_kernel(const IntMatrix& m) {
  if (m.empty()) return {};
  ScalarMatrix t = to_scalar(m).transpose();
  std::vector<std::vector<long>> out;
  for (auto& v : nullspace(t)) {
    mpz_class lcm = 1;
    for (auto& s : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.re().get_den_mpz_t());
    std::vector<mpz_class> iv;
    mpz_class g = 0;
    for (auto& s : v) {
      mpq_class scaled = s.re() * lcm;
      iv.push_back(scaled.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
    std::vector<long> row;
    for (auto& x : iv) {
      mpz_class q = g == 0 ? x : mpz_class(x / g);
      row.push_back(q.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<long> solve_integral(const IntMatrix& m, const std::vector<long>& b) {
  std::vector<Scalar> rhs;
  for (long v : b) rhs.emplace_back(v);
  std::vector<Scalar> x;
  try {
    x = solve(to_scalar(m), rhs);
  } catch (const SingularMatrix& e) {
    throw InternalError(std::string("solve_integral: ") + e.what());
  }
  std::vector<long> out;
  for (auto& s : x) out.push_back(to_long_checked(s.re()));
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  ScalarMatrix inv;
  try {
    inv = mat_inverse(to_scalar(m));
  } catch (const SingularMatrix& e) {
    throw InternalError(std::string("unimodular_inverse: ") + e.what());
  }
  IntMatrix out(inv.rows(), std::vector<long>(inv.cols()));
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) out[i][j] = to_long_checked(inv(i, j).re());
  return out;
}

}  // namespace isopair
