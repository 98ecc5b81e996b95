#include "doctest.h"
#include "isopair/facecoords.hpp"
#include "isopair/sampling.hpp"
#include "examples.hpp"

using namespace isopair;

namespace {

EigenData<Scalar> example_data() {
  return {2, {Scalar(2), Scalar(3)}, {Scalar(5), Scalar(7)}, {Scalar(1), Scalar::rational(35, 6)}};
}

}  // namespace

TEST_CASE("two-by-two example") {
  auto e = example_data();
  auto r = psi(e, FreeBlock<Scalar>{2, {}});
  auto [am, bm] = testdata::printed_pair_n2(e);
  CHECK(testdata::same_charpolys(r.a, r.b, am, bm));
  auto ba = r.b * mat_inverse(r.a);
  CHECK(ba(0, 0) + ba(1, 1) == Scalar::rational(41, 6));
  CHECK(determinant(ba) == Scalar::rational(35, 6));
  CHECK(check_psi(r, e).passed());
}

TEST_CASE("random two-by-two data match the printed pair up to conjugation") {
  Sampler s(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto e = s.eigendata(2);
    auto r = psi(e, FreeBlock<Scalar>{2, {}});
    auto [am, bm] = testdata::printed_pair_n2(e);
    CHECK(testdata::same_charpolys(r.a, r.b, am, bm));
  }
}

TEST_CASE("unit data give unit faces") {
  for (int n = 1; n <= 5; ++n) {
    // gamma_i = (-1)^{n+1} makes every ratio and the midline equal to 1.
    EigenData<Scalar> e{n, std::vector<Scalar>(n, Scalar(1)), std::vector<Scalar>(n, Scalar(1)),
                        std::vector<Scalar>(n, Scalar(n % 2 ? 1 : -1))};
    FreeBlock<Scalar> y{n, std::vector<Scalar>(n >= 2 ? (n - 2) * (n - 1) : 0, Scalar(1))};
    auto fc = solve_face_weights(e, y);
    for (const auto& v : fc.grid) CHECK(v == Scalar(1));
  }
}

TEST_CASE("psi reproduces the spectra") {
  Sampler s(23);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto e = s.eigendata(n);
      auto y = s.free_block(n);
      auto r = psi(e, y);
      CHECK(face_constraint_violations(r.faces, e).empty());
      auto rep = check_psi(r, e);
      for (const auto& c : rep.claims) CHECK_MESSAGE(c.passed, "n=" << n << " " << c.claim << ": " << c.detail);
    }
}

TEST_CASE("connection round trip") {
  Sampler s(29);
  for (int n = 1; n <= 5; ++n) {
    auto e = s.eigendata(n);
    auto fc = solve_face_weights(e, s.free_block(n));
    auto net = connection_from_face_weights(fc);
    auto conn = net.connection();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) CHECK(monodromy(net.graph, conn, net.face(x, y)) == fc.at(x, y));
    CHECK(monodromy(net.graph, conn, net.gamma_x()) == fc.x_x);
    CHECK(monodromy(net.graph, conn, net.gamma_y()) == fc.x_y);
    for (int v = 0; v < n * n; ++v) CHECK(conn.weight[3 * v] == Scalar(1));
  }
}

TEST_CASE("symbolic solve is monomial and matches the numeric solve") {
  Sampler s(31);
  for (int n = 2; n <= 5; ++n) {
    auto table = laurent_exponents(n);
    for (int trial = 0; trial < 5; ++trial) {
      auto e = s.eigendata(n);
      auto y = s.free_block(n);
      auto fc = solve_face_weights(e, y);
      auto values = laurent_assignment(e, y);
      for (int k = 0; k < n * n; ++k) CHECK(laurent_evaluate(table.grid[k], values) == fc.grid[k]);
    }
  }
  auto t2 = laurent_exponents(2);
  CHECK(t2.at(0, 0) == Laurent::parse("-alpha_{1}^{-1}beta_{1}gamma_{1}^{-1}"));
}

TEST_CASE("positivity") {
  Sampler s(37);
  for (int n = 2; n <= 5; ++n) {
    auto rep = check_positivity(s.positive_eigendata(n), s.free_block(n, true));
    CHECK(rep.passed());
  }
  auto e = s.positive_eigendata(3);
  e.alpha[0] = -e.alpha[0];
  e.gamma[0] = -e.gamma[0];
  CHECK_THROWS_AS(check_positivity(e, s.free_block(3, true)), PreconditionError);
}

TEST_CASE("inconsistent data are rejected") {
  auto e = example_data();
  e.gamma[1] = Scalar(6);
  CHECK_THROWS_AS(psi(e, FreeBlock<Scalar>{2, {}}), PreconditionError);
  auto good = example_data();
  CHECK_THROWS_AS(solve_face_weights(good, FreeBlock<Scalar>{2, {Scalar(1)}}), PreconditionError);
}

TEST_CASE("dimension formula") {
  for (int n = 1; n <= 6; ++n) CHECK(dimension(0, 3, n) == (n - 1) * (n - 2));
  CHECK(dimension(0, 3, 4) == 6);
  CHECK(dimension(1, 1, 1) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(dimension(1, 1, n) == n * n - n + 2);
  CHECK_THROWS_AS(dimension(0, 2, 3), PreconditionError);
}
