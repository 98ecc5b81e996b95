#include "doctest.h"
#include "examples.hpp"
#include "isopair/transfer.hpp"

#include <random>

using namespace isopair;

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  long p = 0;
  while (p == 0) p = num(rng);
  return Scalar::rational(p, den(rng));
}

TriangleNetwork<Scalar> random_triangle(Kind kind, int n, std::mt19937_64& rng) {
  std::map<Label, Scalar> a, b;
  for (auto l : black_labels(kind, n)) {
    a[l] = random_weight(rng);
    b[l] = random_weight(rng);
  }
  return build_triangle(kind, n, a, b);
}

}  // namespace

TEST_CASE("symbolic left-turn, right-turn and D matrices match the printed examples") {
  CHECK(testdata::compare_symbolic(left_turn_matrix(symbolic_triangle(Kind::T, 3)), testdata::kLeftTurnT3) == "");
  CHECK(testdata::compare_symbolic(right_turn_matrix(symbolic_triangle(Kind::TPrime, 4)), testdata::kRightTurnTp4) ==
        "");
  CHECK(testdata::compare_symbolic(d_matrix_algebraic(symbolic_triangle(Kind::T, 3)), testdata::kDT3) == "");
}

TEST_CASE("symbolic D agrees with the signed SW path sums") {
  for (int n = 1; n <= 4; ++n)
    for (Kind k : {Kind::T, Kind::TPrime}) {
      auto t = symbolic_triangle(k, n);
      CHECK(d_matrix_combinatorial(t) == d_matrix_algebraic(t));
    }
}

TEST_CASE("unit weights count lattice paths") {
  for (int n = 1; n <= 6; ++n) {
    auto c = path_counts(Kind::T, n, left_turn_family(Kind::T));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(c[i - 1][j - 1] == (j <= i ? binom(i - 1, j - 1) : 0));
  }
}

TEST_CASE("sweep and enumeration agree") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (Kind k : {Kind::T, Kind::TPrime}) {
      auto t = random_triangle(k, n, rng);
      for (auto f : {left_turn_family(k), right_turn_family(k), sw_family(k)})
        CHECK(path_matrix(t, f) == path_matrix_bruteforce(t, f));
    }
}

TEST_CASE("triangularity of the turn matrices") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    auto t = random_triangle(Kind::T, n, rng), tp = random_triangle(Kind::TPrime, n, rng);
    CHECK(is_lower_triangular(left_turn_matrix(t)));
    CHECK(is_upper_triangular(right_turn_matrix(t)));
    CHECK(is_upper_triangular(left_turn_matrix(tp)));
    CHECK(is_lower_triangular(right_turn_matrix(tp)));
    CHECK(is_lower_antitriangular(d_matrix_combinatorial(t)));
    CHECK(is_upper_antitriangular(d_matrix_combinatorial(tp)));
  }
}

TEST_CASE("A and B equal the path sums over the joined cells") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    auto t = random_triangle(Kind::T, n, rng), tp = random_triangle(Kind::TPrime, n, rng);
    CHECK(assemble_A(t, tp) == assemble_bruteforce(t, tp, true));
    CHECK(assemble_B(t, tp) == assemble_bruteforce(t, tp, false));
  }
}

TEST_CASE("zig-zag eigenvalue claims on random tori") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto net = glue_torus(random_triangle(Kind::T, n, rng), random_triangle(Kind::TPrime, n, rng));
      auto rep = verify_theorem1(net);
      for (const auto& c : rep.claims) CHECK_MESSAGE(c.passed, "n=" << n << " " << c.claim << ": " << c.detail);
    }
}

TEST_CASE("float mode passes with tolerance") {
  std::mt19937_64 rng(9);
  auto t = random_triangle(Kind::T, 4, rng), tp = random_triangle(Kind::TPrime, 4, rng);
  for (auto* net : {&t, &tp})
    for (auto& [l, w] : net->a) w = w.as_mode(Mode::Float);
  auto rep = verify_theorem1(glue_torus(t, tp), 1e-8);
  CHECK(rep.passed());
}

TEST_CASE("corrupted sign convention is reported") {
  std::mt19937_64 rng(1);
  auto net = glue_torus(random_triangle(Kind::T, 3, rng), random_triangle(Kind::TPrime, 3, rng));
  auto rep = verify_theorem1(net, 1e-8, SignConvention::Corrupted);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.find("lemma2_T") != nullptr);
  CHECK_FALSE(rep.find("lemma2_T")->passed);
}

TEST_CASE("singular turn matrix is rejected") {
  auto t = constant_triangle<Scalar>(Kind::T, 2, Scalar(1));
  t.a[{1, 1}] = Scalar(0);
  CHECK_THROWS_AS(d_matrix_algebraic(t), SingularMatrix);
}
