#pragma once

#include <map>
#include <string>
#include <vector>

#include "isopair/honeycomb.hpp"
#include "isopair/laurent.hpp"
#include "isopair/linalg.hpp"
#include "isopair/transfer.hpp"

namespace isopair {

/// Prescribed spectra, 0-based storage of alpha_1..alpha_n etc.
template <class R>
struct EigenData {
  int n = 0;
  std::vector<R> alpha, beta, gamma;
};

/// The free (n-2) x (n-1) block Y, stored row-major: Y(x,y) at x*(n-1)+y.
template <class R>
struct FreeBlock {
  int n = 0;
  std::vector<R> y;

  std::size_t rows() const { return n >= 2 ? n - 2 : 0; }
  std::size_t cols() const { return n >= 2 ? n - 1 : 0; }
  const R& at(int x, int yy) const { return y.at(x * cols() + yy); }
};

/// Face weights X(x,y) in torus coordinates plus the two homology monodromies.
template <class R>
struct FaceCoordinates {
  int n = 0;
  std::vector<R> grid;  // X(x,y) at x*n+y
  R x_x, x_y;

  R& at(int x, int y) { return grid.at(x * n + y); }
  const R& at(int x, int y) const { return grid.at(x * n + y); }
};

/// prod alpha_i gamma_i / beta_i; equals 1 for consistent data.
template <class R>
R consistency_residual(const EigenData<R>& e);

/// Checks sizes, nonzero entries and the product relation; throws PreconditionError.
void require_consistent(const EigenData<Scalar>& e, double tol = 1e-9);

/// Row x multiplies to alpha_{x+2}/alpha_{x+1}; column y to beta_{1-y}/beta_{-y};
/// antidiagonal x+y=s to gamma_{-s}/gamma_{-s-1} (indices 1-based mod n). The
/// faces with x+y <= n-2 multiply to beta_1/(e gamma_1 alpha_1), e = (-1)^{n+1}.
/// Returns one message per violated relation.
template <class R>
std::vector<std::string> face_constraint_violations(const FaceCoordinates<R>& fc, const EigenData<R>& e,
                                                    double tol = 1e-9);

/// The unique face weights extending Y. X_x = alpha_1, X_y = beta_1.
template <class R>
FaceCoordinates<R> solve_face_weights(const EigenData<R>& e, const FreeBlock<R>& y, double tol = 1e-9);

/// Edge weights on G_n realising the face weights and X_x, X_y, with all
/// horizontal edges of weight 1. Recomputes every monodromy before returning.
TorusNetwork<Scalar> connection_from_face_weights(const FaceCoordinates<Scalar>& fc, double tol = 1e-9);

struct PsiResult {
  FaceCoordinates<Scalar> faces;
  TorusNetwork<Scalar> network;
  ScalarMatrix a, b;
};

/// The parameterization: eigen data and free block to the pair (A, B).
PsiResult psi(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y, double tol = 1e-9);

/// Ordered checks diag(A) = alpha, diag(B) = beta, diag(D D') = gamma plus
/// the zig-zag report of the underlying network.
Report check_psi(const PsiResult& r, const EigenData<Scalar>& e, double tol = 1e-9);

/// Symbolic solve. Variables alpha_{i}, beta_{i}, gamma_{i} (i < n) and
/// Y_{x,y}; gamma_n is eliminated through the product relation. Each entry
/// is a single monomial with coefficient +-1.
FaceCoordinates<Laurent> laurent_exponents(int n);
EigenData<Laurent> symbolic_eigendata(int n);
FreeBlock<Laurent> symbolic_free_block(int n);
/// Variable assignment matching laurent_exponents for concrete inputs.
std::map<std::string, Scalar> laurent_assignment(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y);
Scalar laurent_evaluate(const Laurent& p, const std::map<std::string, Scalar>& values);

/// Positivity: n odd with alpha, beta, gamma, Y positive, or n even with
/// gamma negative. Throws PreconditionError when the sign hypothesis fails.
Report check_positivity(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y);

/// n^2 (2g-2+k) - kn + 2; requires 2-2g-k < 0 and n >= 1.
long dimension(int g, int k, int n);

}  // namespace isopair
