#include "doctest.h"
#include "isopair/surfaces.hpp"

using namespace isopair;

TEST_CASE("triangle counts") {
  CHECK(build_triangulation(0, 3).num_triangles() == 2);
  CHECK(build_triangulation(1, 1).num_triangles() == 2);
  CHECK(build_triangulation(3, 5).num_triangles() == 18);
  CHECK_THROWS_AS(build_triangulation(0, 2), PreconditionError);
  CHECK_THROWS_AS(build_triangulation(1, 0), PreconditionError);
}

TEST_CASE("the three-holed sphere conjugates to a once-punctured torus") {
  auto inv = conjugate_surface_invariants(build_triangulation(0, 3));
  CHECK(inv.g_prime == 1);
  CHECK(inv.k_prime == 1);
  auto g = dual_graph(build_triangulation(0, 3)).conjugate();
  CHECK(ribbon_isomorphic(g, theta_graph()));
}

TEST_CASE("surface claims") {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 3}})
    for (int n = 1; n <= 3; ++n) {
      auto rep = analyze_surface(g, k, n);
      for (const auto& c : rep.claims)
        CHECK_MESSAGE(c.passed, "(" << g << "," << k << ") n=" << n << " " << c.claim << ": " << c.detail);
    }
}

TEST_CASE("exponent ranks for the sphere") {
  for (int n = 2; n <= 4; ++n) {
    auto coarse = dual_graph(build_triangulation(0, 3)).conjugate();
    auto em = eigenvalue_exponent_matrix(build_surface_Gn(coarse, n), coarse);
    auto r = verify_independence(em);
    CHECK(r.rank == static_cast<std::size_t>(3 * n - 1));
    CHECK(r.free_count == (n - 1) * (n - 2));
    CHECK(r.product_relation);
  }
}

TEST_CASE("a single cell has k rows of rank k-1") {
  auto coarse = dual_graph(build_triangulation(1, 2)).conjugate();
  auto em = eigenvalue_exponent_matrix(build_surface_Gn(coarse, 1), coarse);
  CHECK(em.rows.size() == 2);
  CHECK(verify_independence(em).rank == 1);
}
