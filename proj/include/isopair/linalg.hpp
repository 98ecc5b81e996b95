#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "isopair/matrix.hpp"
#include "isopair/scalar.hpp"

namespace isopair {

using ScalarMatrix = Matrix<Scalar>;

/// Multiset of scalars; order-insensitive.
struct Multiset {
  std::vector<Scalar> elements;

  std::size_t size() const { return elements.size(); }
  /// Exact equality up to permutation (all elements exact).
  bool equals_exact(const Multiset& other) const;
  /// Greedy minimal-distance matching; each pair must satisfy approx_equal(tol).
  bool equals_approx(const Multiset& other, double tol = 1e-8) const;
  /// Exact comparison when both sides are exact, tolerance otherwise.
  bool equals(const Multiset& other, double tol = 1e-8) const;
  /// Sorted canonical copy (exact: by real then imaginary part; float: lexicographic on doubles).
  Multiset sorted() const;
};

ScalarMatrix scalar_matrix(std::initializer_list<std::initializer_list<long>> rows);
ScalarMatrix cast(const ScalarMatrix& m, Mode mode);

/// Gauss-Jordan inverse; throws SingularMatrix with the column of the vanishing pivot.
/// Exact mode pivots on the first nonzero entry, float mode on the largest modulus.
ScalarMatrix mat_inverse(const ScalarMatrix& a);

/// Fraction-free (Bareiss) determinant.
Scalar determinant(const ScalarMatrix& a);

/// Multiset of diagonal entries; throws PreconditionError unless the matrix is
/// exactly lower or upper triangular.
Multiset triangular_spectrum(const ScalarMatrix& a);

/// Eigenvalues in double precision (complex Schur form via Eigen); exact
/// entries are converted first. Throws ConvergenceError if QR stalls.
Multiset numeric_spectrum(const ScalarMatrix& a);

/// Rank and null space over the field of the entries (exact in exact mode).
std::size_t rank(const ScalarMatrix& a);
/// Basis of {x : a x = 0}, one column vector per basis element.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& a);

/// Solves a x = b for square nonsingular a.
std::vector<Scalar> solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

std::vector<Scalar> mat_vec(const ScalarMatrix& a, const std::vector<Scalar>& x);

/// Characteristic polynomial coefficients c_0..c_n of det(tI - a), c_n = 1 (Faddeev-LeVerrier).
std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& a);

/// Float-mode triangularity with an absolute tolerance on the would-be zeros.
bool is_lower_triangular(const ScalarMatrix& a, double tol);
bool is_upper_triangular(const ScalarMatrix& a, double tol);
bool approx_equal(const ScalarMatrix& a, const ScalarMatrix& b, double tol);

// Integer matrices (exponent tables, cycle coordinates).

using IntMatrix = std::vector<std::vector<long>>;

/// Rank over Q via fraction-free elimination on mpz_class.
std::size_t integer_rank(const IntMatrix& m);
/// Basis of the left kernel {y : y^T m = 0}, scaled to primitive integer vectors.
std::vector<std::vector<long>> left_kernel(const IntMatrix& m);
/// Solves the square system m x = b over Q; throws InternalError when m is
/// singular or the solution is not integral.
std::vector<long> solve_integral(const IntMatrix& m, const std::vector<long>& b);
/// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace isopair
