#pragma once

#include <string>
#include <vector>

#include "isopair/facecoords.hpp"
#include "isopair/laurent.hpp"
#include "isopair/linalg.hpp"
#include "isopair/matrix.hpp"

namespace isopair::testdata {

// Printed symbolic matrices, row-major.
inline const std::vector<std::vector<std::string>> kLeftTurnT3 = {
    {"a_{11}", "0", "0"},
    {"b_{11}a_{21}", "a_{22}a_{21}", "0"},
    {"b_{11}b_{21}a_{31}", "a_{22}b_{21}a_{31} + b_{22}a_{32}a_{31}", "a_{33}a_{32}a_{31}"},
};

inline const std::vector<std::vector<std::string>> kRightTurnTp4 = {
    {"a_{00}a_{01}a_{02}", "0", "0", "0"},
    {"a_{00}a_{01}b_{02} + a_{00}b_{01}a_{11} + b_{00}a_{10}a_{11}", "a_{10}a_{11}", "0", "0"},
    {"a_{00}b_{01}b_{11} + b_{00}a_{10}b_{11} + b_{00}b_{10}a_{20}", "b_{10}a_{20} + a_{10}b_{11}", "a_{20}", "0"},
    {"b_{00}b_{10}b_{20}", "b_{10}b_{20}", "b_{20}", "1"},
};

inline const std::vector<std::vector<std::string>> kDT3 = {
    {"0", "0", "a_{31}^{-1}b_{31}"},
    {"0", "-a_{21}^{-1}b_{21}a_{32}^{-1}b_{32}", "a_{31}^{-1}a_{32}^{-1}b_{32}"},
    {"a_{11}^{-1}b_{11}a_{22}^{-1}b_{22}a_{33}^{-1}b_{33}",
     "-a_{21}^{-1}a_{22}^{-1}b_{22}a_{33}^{-1}b_{33} - a_{21}^{-1}b_{21}a_{32}^{-1}a_{33}^{-1}b_{33}",
     "a_{31}^{-1}a_{32}^{-1}a_{33}^{-1}b_{33}"},
};

/// First mismatching entry as "(i,j): got X, expected Y", or empty.
inline std::string compare_symbolic(const Matrix<Laurent>& m, const std::vector<std::vector<std::string>>& expected) {
  if (m.rows() != expected.size() || m.cols() != expected[0].size()) return "shape mismatch";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Laurent e = Laurent::parse(expected[i][j]);
      if (m(i, j).str() != e.str())
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " + m(i, j).str() + ", expected " +
               e.str();
    }
  return "";
}

// The printed n = 2 pair in terms of the eigenvalues.
inline std::pair<ScalarMatrix, ScalarMatrix> printed_pair_n2(const EigenData<Scalar>& e) {
  const auto &a = e.alpha, &b = e.beta, &g = e.gamma;
  ScalarMatrix am{{a[0], Scalar(0)}, {a[0] - b[0] / g[0], a[1]}};
  ScalarMatrix bm{{b[0], b[1] - a[1] * g[0]}, {Scalar(0), b[1]}};
  return {am, bm};
}

/// Equal characteristic polynomials of A, B and BA^{-1}.
inline bool same_charpolys(const ScalarMatrix& a1, const ScalarMatrix& b1, const ScalarMatrix& a2,
                           const ScalarMatrix& b2) {
  return characteristic_polynomial(a1) == characteristic_polynomial(a2) &&
         characteristic_polynomial(b1) == characteristic_polynomial(b2) &&
         characteristic_polynomial(b1 * mat_inverse(a1)) == characteristic_polynomial(b2 * mat_inverse(a2));
}

}  // namespace isopair::testdata
