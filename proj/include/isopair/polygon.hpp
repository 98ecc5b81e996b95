#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isopair {

using LatticePoint = std::pair<long, long>;

/// Convex lattice polygon, vertices counterclockwise.
struct LatticePolygon {
  std::vector<LatticePoint> vertices;
};

struct Census {
  long interior = 0;
  long boundary = 0;
  bool operator==(const Census&) const = default;
};

/// Throws PreconditionError unless the polygon is strictly convex,
/// counterclockwise and of positive area.
void validate_polygon(const LatticePolygon& p);

/// Boundary points by gcd sums and interior points by Pick's theorem.
Census lattice_census(const LatticePolygon& p);
/// Twice the signed area (shoelace).
long twice_area(const LatticePolygon& p);

struct ScottRange {
  int k_min = 3;
  std::optional<int> k_max;  // empty when unbounded
};

ScottRange scott_range(int g);

/// One half-plane cut x + i y >= i, with the census before and after.
struct CutStep {
  long i = 0;
  Census before, after;
};

struct PolygonConstruction {
  LatticePolygon polygon;
  std::vector<CutStep> cuts;  // every cut tried, in order
};

/// Polygon with g interior and k boundary lattice points. Throws
/// PreconditionError outside the Scott range and InternalError if a cut
/// changes the interior count or no cut reaches k.
PolygonConstruction polygon_construction(int g, int k);
LatticePolygon polygon_for(int g, int k);

/// Intersection with {x + i y >= i}, vertex hull re-derived.
LatticePolygon cut_polygon(const LatticePolygon& p, long i);

std::string polygon_to_json(const LatticePolygon& p);

}  // namespace isopair
