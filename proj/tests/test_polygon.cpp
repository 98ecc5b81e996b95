#include "doctest.h"
#include "isopair/error.hpp"
#include "isopair/polygon.hpp"

using namespace isopair;

TEST_CASE("census") {
  CHECK(lattice_census({{{0, 0}, {1, 0}, {0, 1}}}) == Census{0, 3});
  CHECK(lattice_census({{{0, 0}, {3, 0}, {0, 3}}}) == Census{1, 9});
  CHECK(lattice_census({{{0, 1}, {9, 0}, {0, 2}}}) == Census{4, 3});
  CHECK_THROWS_AS(lattice_census({{{0, 0}, {1, 0}, {2, 0}}}), PreconditionError);
  CHECK_THROWS_AS(lattice_census({{{0, 0}, {0, 1}, {1, 0}}}), PreconditionError);
}

TEST_CASE("named constructions") {
  auto p = polygon_for(0, 5);
  CHECK(p.vertices == std::vector<LatticePoint>{{0, 0}, {3, 0}, {0, 1}});
  CHECK(polygon_for(1, 9).vertices == std::vector<LatticePoint>{{0, 0}, {3, 0}, {0, 3}});
  CHECK(polygon_for(2, 10).vertices == std::vector<LatticePoint>{{0, 0}, {6, 0}, {0, 2}});
}

TEST_CASE("scott range") {
  CHECK_FALSE(scott_range(0).k_max.has_value());
  CHECK(*scott_range(1).k_max == 9);
  CHECK(*scott_range(5).k_max == 16);
  CHECK_THROWS_AS(polygon_for(1, 10), PreconditionError);
  CHECK_THROWS_AS(polygon_for(0, 2), PreconditionError);
}

TEST_CASE("every admissible pair is realized") {
  for (int g = 0; g <= 10; ++g) {
    auto r = scott_range(g);
    int kmax = r.k_max ? *r.k_max : 40;
    for (int k = r.k_min; k <= kmax; ++k) {
      auto pc = polygon_construction(g, k);
      CHECK(lattice_census(pc.polygon) == Census{g, k});
      CHECK(twice_area(pc.polygon) == 2 * g + k - 2);
      for (const auto& c : pc.cuts) CHECK(c.after.interior == c.before.interior);
    }
  }
}
