#include "doctest.h"
#include "isopair/laurent.hpp"
#include "isopair/linalg.hpp"

using namespace isopair;

TEST_CASE("scalar parsing and arithmetic") {
  CHECK(Scalar::parse("-3/4") == Scalar::rational(-3, 4));
  CHECK(Scalar::parse("0.25") == Scalar::rational(1, 4));
  CHECK(Scalar::parse("010") == Scalar(10));
  CHECK(Scalar::parse("1/2+3i").im() == 3);
  CHECK((Scalar::rational(1, 2) + Scalar::rational(1, 3)).str() == "5/6");
  CHECK(Scalar(2).pow(-2) == Scalar::rational(1, 4));
  CHECK((Scalar(1) * Scalar::float_value(0.5)).mode() == Mode::Float);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar::float_value(0.0), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse("1/"), ParseError);
}

TEST_CASE("laurent normal form") {
  auto a = Laurent::parse("a_{22}b_{21}a_{31} + b_{22}a_{32}a_{31}");
  auto b = Laurent::parse("b_{22}a_{31}a_{32} + a_{31}a_{22}b_{21}");
  CHECK(a == b);
  CHECK(a.str() == b.str());
  auto x = Laurent::variable("x");
  CHECK((x * x.inverse()) == Laurent(1));
  CHECK(Laurent::parse("-a_{21}^{-1}b_{21}") == -(Laurent::variable("b_{21}") / Laurent::variable("a_{21}")));
  CHECK_THROWS_AS(Laurent(1) / (x + Laurent(1)), DivisionByZero);
}

TEST_CASE("matrix products and inverses") {
  auto a = scalar_matrix({{2, 0}, {-3, 3}});
  ScalarMatrix ainv{{Scalar::rational(1, 2), Scalar(0)}, {Scalar::rational(1, 2), Scalar::rational(1, 3)}};
  CHECK(mat_inverse(a) == ainv);
  CHECK(a * ainv == ScalarMatrix::identity(2, Scalar(1)));
  ScalarMatrix prod{{Scalar::rational(9, 2), Scalar::rational(4, 3)}, {Scalar::rational(7, 2), Scalar::rational(7, 3)}};
  CHECK(scalar_matrix({{5, 4}, {0, 7}}) * ainv == prod);
  CHECK_THROWS_AS(mat_inverse(scalar_matrix({{1, 1}, {1, 1}})), SingularMatrix);
  CHECK_THROWS_AS(scalar_matrix({{1, 2}}) * scalar_matrix({{1, 2}}), DimensionError);
}

TEST_CASE("spectra") {
  auto t = triangular_spectrum(scalar_matrix({{2, 0}, {-3, 3}}));
  CHECK(t.equals_exact(Multiset{{Scalar(3), Scalar(2)}}));
  ScalarMatrix m{{Scalar::rational(9, 2), Scalar::rational(4, 3)}, {Scalar::rational(7, 2), Scalar::rational(7, 3)}};
  CHECK(numeric_spectrum(m).equals_approx(Multiset{{Scalar(1), Scalar::rational(35, 6)}}, 1e-10));
  CHECK(numeric_spectrum(scalar_matrix({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}))
            .equals_approx(Multiset{{Scalar(5), Scalar(2), Scalar(3)}}, 1e-10));
  CHECK_THROWS_AS(triangular_spectrum(scalar_matrix({{1, 2}, {3, 4}})), PreconditionError);
  auto cp = characteristic_polynomial(m);
  CHECK(cp[1] == Scalar::rational(-41, 6));
  CHECK(cp[0] == Scalar::rational(35, 6));
  CHECK(determinant(m) == Scalar::rational(35, 6));
}

TEST_CASE("rank, nullspace and solve") {
  auto m = scalar_matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (auto& v : mat_vec(m, ns[0])) CHECK(v.is_zero());
  auto x = solve(scalar_matrix({{2, 1}, {1, 3}}), {Scalar(3), Scalar(5)});
  CHECK(x[0] == Scalar::rational(4, 5));
  CHECK(x[1] == Scalar::rational(7, 5));
}

TEST_CASE("integer linear algebra") {
  IntMatrix m{{1, 1, 0}, {0, 1, 1}, {-1, -2, -1}};
  CHECK(integer_rank(m) == 2);
  auto k = left_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<long>{1, 1, 1});
  IntMatrix u{{1, 2}, {0, 1}};
  CHECK(unimodular_inverse(u) == IntMatrix{{1, -2}, {0, 1}});
  CHECK(solve_integral(u, {5, 2}) == std::vector<long>{1, 2});
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}
