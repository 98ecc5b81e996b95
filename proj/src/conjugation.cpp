#include "isopair/conjugation.hpp"

#include <algorithm>

namespace isopair {

namespace {

ScalarMatrix columns(const std::vector<std::vector<Scalar>>& vs, std::size_t rows) {
  ScalarMatrix m(rows, vs.size(), Scalar(0));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = vs[j][i];
  return m;
}

ScalarMatrix hcat(const ScalarMatrix& x, const ScalarMatrix& y) {
  ScalarMatrix m(x.rows(), x.cols() + y.cols(), Scalar(0));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) m(i, x.cols() + j) = y(i, j);
  }
  return m;
}

bool same_value(const Scalar& x, const Scalar& y) {
  return x.is_exact() && y.is_exact() ? x == y : approx_equal(x, y, 1e-9);
}

}  // namespace

ScalarMatrix Flag::subspace(int i) const {
  if (i < 0 || i > n()) throw DimensionError("Flag::subspace: index out of range");
  return columns({basis.begin(), basis.begin() + i}, basis.empty() ? 0 : basis[0].size());
}

Flag invariant_flag(const ScalarMatrix& a, const std::vector<Scalar>& order) {
  const std::size_t n = a.n();
  if (order.size() != n) throw DimensionError("invariant_flag: order has the wrong length");
  Flag f;
  std::vector<Scalar> seen;
  for (const Scalar& lambda : order) {
    if (std::any_of(seen.begin(), seen.end(), [&](const Scalar& s) { return same_value(s, lambda); })) continue;
    seen.push_back(lambda);
    ScalarMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    auto space = nullspace(shifted);
    auto mult = static_cast<std::size_t>(
        std::count_if(order.begin(), order.end(), [&](const Scalar& s) { return same_value(s, lambda); }));
    if (space.size() < mult)
      throw PreconditionError("invariant_flag: eigenvalue " + lambda.str() + " has geometric multiplicity " +
                              std::to_string(space.size()) + " < " + std::to_string(mult));
    space.resize(mult);
    // Placed later at the positions where lambda occurs in `order`.
    std::size_t k = 0;
    if (f.basis.size() < n) f.basis.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      if (same_value(order[i], lambda)) f.basis[i] = space[k++];
  }
  if (rank(f.subspace(static_cast<int>(n))) != n) throw PreconditionError("invariant_flag: eigenvectors are dependent");
  return f;
}

bool is_invariant(const ScalarMatrix& a, const Flag& f) {
  for (int i = 1; i <= f.n(); ++i) {
    auto fi = f.subspace(i);
    if (rank(hcat(fi, a * fi)) != static_cast<std::size_t>(i)) return false;
  }
  return true;
}

bool transversal(const Flag& f, const Flag& g) {
  const int n = f.n();
  if (g.n() != n) throw DimensionError("transversal: flags of different size");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int dim = i + j - static_cast<int>(rank(hcat(f.subspace(i), g.subspace(j))));
      if (dim != std::max(0, i + j - n)) return false;
    }
  return true;
}

TriangularForm triangularize_pair(const ScalarMatrix& a, const ScalarMatrix& b, const std::vector<Scalar>& alpha,
                                  const std::vector<Scalar>& beta) {
  const int n = static_cast<int>(a.n());
  if (static_cast<int>(b.n()) != n) throw DimensionError("triangularize_pair: size mismatch");
  std::vector<Scalar> rev(alpha.rbegin(), alpha.rend());
  Flag f = invariant_flag(a, rev), g = invariant_flag(b, beta);
  if (!transversal(f, g)) throw PreconditionError("triangularize_pair: invariant flags are not transverse");
  std::vector<std::vector<Scalar>> cols;
  for (int k = 1; k <= n; ++k) {
    auto fk = f.subspace(n + 1 - k), gk = g.subspace(k);
    ScalarMatrix neg_g = gk;
    for (std::size_t i = 0; i < neg_g.rows(); ++i)
      for (std::size_t j = 0; j < neg_g.cols(); ++j) neg_g(i, j) = -neg_g(i, j);
    auto ker = nullspace(hcat(fk, neg_g));
    if (ker.size() != 1) throw InternalError("triangularize_pair: intersection is not a line");
    std::vector<Scalar> coeff(ker[0].begin(), ker[0].begin() + (n + 1 - k));
    cols.push_back(mat_vec(fk, coeff));
  }
  TriangularForm t;
  t.m = columns(cols, n);
  auto minv = mat_inverse(t.m);
  t.a = minv * a * t.m;
  t.b = minv * b * t.m;
  return t;
}

}  // namespace isopair
