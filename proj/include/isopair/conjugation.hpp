#pragma once

#include <vector>

#include "isopair/linalg.hpp"

namespace isopair {

/// A complete flag given by an ordered basis: f_i = span(v_1..v_i).
struct Flag {
  std::vector<std::vector<Scalar>> basis;

  int n() const { return static_cast<int>(basis.size()); }
  /// The first i basis vectors as the columns of an n x i matrix.
  ScalarMatrix subspace(int i) const;
};

/// Flag of eigenvectors of `a`, the i-th vector belonging to order[i]. A
/// repeated eigenvalue consumes its eigenspace basis in order. Throws
/// PreconditionError for a defective matrix or an eigenvalue not in the spectrum.
Flag invariant_flag(const ScalarMatrix& a, const std::vector<Scalar>& order);

/// A f_i is contained in f_i for every i.
bool is_invariant(const ScalarMatrix& a, const Flag& f);

/// dim(f_i ∩ g_j) = max(0, i+j-n) for all i, j.
bool transversal(const Flag& f, const Flag& g);

struct TriangularForm {
  ScalarMatrix m;   // change of basis
  ScalarMatrix a;   // M^{-1} A M, lower triangular
  ScalarMatrix b;   // M^{-1} B M, upper triangular
};

/// Simultaneous normal form: column k of M spans f_{n+1-k} ∩ g_k, where f is
/// the invariant flag of A taken in reverse alpha order and g that of B in
/// beta order, so diag(A') follows alpha and diag(B') follows beta. Throws
/// PreconditionError when the flags are not transverse.
TriangularForm triangularize_pair(const ScalarMatrix& a, const ScalarMatrix& b, const std::vector<Scalar>& alpha,
                                  const std::vector<Scalar>& beta);

}  // namespace isopair
