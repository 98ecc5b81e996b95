#include "doctest.h"
#include "isopair/conjugation.hpp"

#include <random>

using namespace isopair;

namespace {

ScalarMatrix random_invertible(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  for (;;) {
    ScalarMatrix p(n, n, Scalar(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = Scalar(d(rng));
    if (!determinant(p).is_zero()) return p;
  }
}

std::vector<Scalar> column(const ScalarMatrix& m, int j) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < m.rows(); ++i) c.push_back(m(i, j));
  return c;
}

}  // namespace

TEST_CASE("invariant flags of a diagonal matrix") {
  auto d = scalar_matrix({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  auto f = invariant_flag(d, {Scalar(2), Scalar(3), Scalar(5)});
  auto g = invariant_flag(d, {Scalar(5), Scalar(3), Scalar(2)});
  auto id = ScalarMatrix::identity(3, Scalar(1));
  for (int i = 0; i < 3; ++i) {
    CHECK(rank(f.subspace(i + 1)) == static_cast<std::size_t>(i + 1));
    CHECK(f.basis[i] == column(id, i));
    CHECK(g.basis[i] == column(id, 2 - i));
  }
  CHECK(transversal(f, g));
  CHECK_FALSE(transversal(f, f));
}

TEST_CASE("invariance under conjugation") {
  std::mt19937_64 rng(2);
  auto p = random_invertible(3, rng);
  auto a = p * scalar_matrix({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) * mat_inverse(p);
  CHECK(is_invariant(a, invariant_flag(a, {Scalar(5), Scalar(2), Scalar(3)})));
  CHECK_THROWS_AS(invariant_flag(scalar_matrix({{1, 1}, {0, 1}}), {Scalar(1), Scalar(1)}), PreconditionError);
}

TEST_CASE("an already triangular pair gives a diagonal change of basis") {
  auto a = scalar_matrix({{2, 0}, {-3, 3}});
  auto b = scalar_matrix({{5, 4}, {0, 7}});
  auto t = triangularize_pair(a, b, {Scalar(2), Scalar(3)}, {Scalar(5), Scalar(7)});
  CHECK(t.m(0, 1).is_zero());
  CHECK(t.m(1, 0).is_zero());
  CHECK(t.a == a);
  CHECK(t.b == b);
}

TEST_CASE("random conjugation of the two-by-two pair is undone") {
  std::mt19937_64 rng(4);
  auto a = scalar_matrix({{2, 0}, {-3, 3}});
  auto b = scalar_matrix({{5, 4}, {0, 7}});
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_invertible(2, rng), pinv = mat_inverse(p);
    auto t = triangularize_pair(p * a * pinv, p * b * pinv, {Scalar(2), Scalar(3)}, {Scalar(5), Scalar(7)});
    CHECK(is_lower_triangular(t.a));
    CHECK(is_upper_triangular(t.b));
    CHECK(t.a.diagonal() == std::vector<Scalar>{Scalar(2), Scalar(3)});
    CHECK(t.b.diagonal() == std::vector<Scalar>{Scalar(5), Scalar(7)});
    // Rescaling the columns leaves the diagonal unchanged.
    ScalarMatrix delta{{Scalar(3), Scalar(0)}, {Scalar(0), Scalar::rational(-1, 2)}};
    auto m2 = t.m * delta;
    CHECK((mat_inverse(m2) * p * a * pinv * m2).diagonal() == t.a.diagonal());
  }
}

TEST_CASE("non-transverse flags are rejected") {
  auto a = scalar_matrix({{2, 0}, {0, 3}});
  CHECK_THROWS_AS(triangularize_pair(a, a, {Scalar(2), Scalar(3)}, {Scalar(3), Scalar(2)}), PreconditionError);
}
