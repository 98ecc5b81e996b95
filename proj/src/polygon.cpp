#include "isopair/polygon.hpp"

#include <numeric>

#include "isopair/error.hpp"
#include "json.hpp"

namespace isopair {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Drops repeated and collinear vertices.
LatticePolygon hull_vertices(std::vector<LatticePoint> pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& prev = pts[(k + pts.size() - 1) % pts.size()];
      const auto& next = pts[(k + 1) % pts.size()];
      if (pts[k] == prev || cross(prev, pts[k], next) == 0) {
        pts.erase(pts.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return {pts};
}

}  // namespace

long twice_area(const LatticePolygon& p) {
  long s = 0;
  const auto& v = p.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    s += a.first * b.second - a.second * b.first;
  }
  return s;
}

void validate_polygon(const LatticePolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) throw PreconditionError("polygon: fewer than three vertices");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (cross(v[k], v[(k + 1) % v.size()], v[(k + 2) % v.size()]) <= 0)
      throw PreconditionError("polygon: not strictly convex and counterclockwise");
  if (twice_area(p) <= 0) throw PreconditionError("polygon: area must be positive");
}

Census lattice_census(const LatticePolygon& p) {
  validate_polygon(p);
  Census c;
  const auto& v = p.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    c.boundary += std::gcd(std::labs(b.first - a.first), std::labs(b.second - a.second));
  }
  long a2 = twice_area(p);
  // Pick: A = I + B/2 - 1.
  if ((a2 - c.boundary + 2) % 2 != 0) throw InternalError("lattice_census: Pick parity violated");
  c.interior = (a2 - c.boundary + 2) / 2;
  return c;
}

ScottRange scott_range(int g) {
  if (g < 0) throw PreconditionError("scott_range: g must be non-negative");
  if (g == 0) return {3, std::nullopt};
  if (g == 1) return {3, 9};
  return {3, 2 * g + 6};
}

LatticePolygon cut_polygon(const LatticePolygon& p, long i) {
  // Keep f >= 0 with f(x,y) = x + i y - i (Sutherland-Hodgman for one half-plane).
  auto f = [i](const LatticePoint& q) { return q.first + i * q.second - i; };
  std::vector<LatticePoint> out;
  const auto& v = p.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    long fa = f(a), fb = f(b);
    if (fa >= 0) out.push_back(a);
    if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
      long den = fa - fb;
      long nx = a.first * den + (b.first - a.first) * fa, ny = a.second * den + (b.second - a.second) * fa;
      if (nx % den != 0 || ny % den != 0) throw InternalError("cut_polygon: cut creates a non-lattice vertex");
      out.emplace_back(nx / den, ny / den);
    }
  }
  return hull_vertices(out);
}

PolygonConstruction polygon_construction(int g, int k) {
  ScottRange r = scott_range(g);
  if (k < r.k_min || (r.k_max && k > *r.k_max))
    throw PreconditionError("polygon_for: (g,k) = (" + std::to_string(g) + "," + std::to_string(k) +
                            ") is outside the realizable range");
  PolygonConstruction pc;
  auto done = [&](LatticePolygon p) {
    pc.polygon = std::move(p);
    Census c = lattice_census(pc.polygon);
    if (c.interior != g || c.boundary != k) throw InternalError("polygon_for: census mismatch");
    return pc;
  };
  if (g == 0) return done({{{0, 0}, {k - 2, 0}, {0, 1}}});
  if (g == 1 && k == 9) return done({{{0, 0}, {3, 0}, {0, 3}}});
  if (k == 3) return done({{{0, 1}, {2L * g + 1, 0}, {0, 2}}});
  LatticePolygon base{{{0, 0}, {2L * g + 2, 0}, {0, 2}}};
  if (k == 2 * g + 6) return done(base);
  Census before = lattice_census(base);
  for (long i = 1; i <= 2L * g + 2; ++i) {
    LatticePolygon cut = cut_polygon(base, i);
    Census after = lattice_census(cut);
    pc.cuts.push_back({i, before, after});
    if (after.interior != before.interior || after.boundary >= before.boundary)
      throw InternalError("polygon_for: cut through (0,1) and (" + std::to_string(i) + ",0) changed the interior count");
    if (after.boundary == k) return done(cut);
  }
  throw InternalError("polygon_for: no cut reaches the requested boundary count");
}

LatticePolygon polygon_for(int g, int k) { return polygon_construction(g, k).polygon; }

std::string polygon_to_json(const LatticePolygon& p) {
  Census c = lattice_census(p);
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (auto [x, y] : p.vertices) j["vertices"].push_back({x, y});
  j["interior"] = c.interior;
  j["boundary"] = c.boundary;
  return j.dump(2);
}

}  // namespace isopair
