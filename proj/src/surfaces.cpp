#include "isopair/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "isopair/facecoords.hpp"
#include "json.hpp"

namespace isopair {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

using Tri = std::array<int, 3>;  // indices into the upper polygon, counterclockwise

// Boundary side index of the polygon side (u, v) or -1 for a diagonal.
int boundary_side(int u, int v, int m) {
  if (v == (u + 1) % m) return u;
  return -1;
}

// Fills adjacency between the upper triangles and the triangle owning each boundary side.
void upper_adjacency(const std::vector<Tri>& tris, int m, std::vector<std::array<std::pair<int, int>, 3>>& inner,
                     std::vector<std::pair<int, int>>& owner) {
  std::map<std::pair<int, int>, std::pair<int, int>> side;
  inner.assign(tris.size(), {std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}});
  owner.assign(m, {-1, -1});
  for (int t = 0; t < static_cast<int>(tris.size()); ++t)
    for (int s = 0; s < 3; ++s) {
      int u = tris[t][s], v = tris[t][(s + 1) % 3];
      int b = boundary_side(u, v, m);
      if (b >= 0) {
        owner[b] = {t, s};
      } else if (auto it = side.find({v, u}); it != side.end()) {
        inner[t][s] = it->second;
        inner[it->second.first][it->second.second] = {t, s};
      } else {
        side[{u, v}] = {t, s};
      }
    }
}

std::vector<Color> tree_colouring(const std::vector<std::array<std::pair<int, int>, 3>>& inner) {
  std::vector<int> col(inner.size(), -1);
  std::queue<int> q;
  col[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    for (auto [u, s] : inner[t])
      if (u >= 0 && col[u] < 0) {
        col[u] = 1 - col[t];
        q.push(u);
      }
  }
  std::vector<Color> out;
  for (int c : col) out.push_back(c == 0 ? Color::Black : Color::White);
  return out;
}

// Depth-first search over triangulations of the convex m-gon; stops at the first accepted one.
bool search(std::vector<std::pair<int, int>>& pending, std::vector<Tri>& tris,
            const std::function<bool(const std::vector<Tri>&)>& accept) {
  if (pending.empty()) return accept(tris);
  auto [i, j] = pending.back();
  pending.pop_back();
  bool found = false;
  if (j - i < 2) {
    found = search(pending, tris, accept);
  } else {
    for (int l = i + 1; l < j && !found; ++l) {
      tris.push_back({i, l, j});
      pending.emplace_back(i, l);
      pending.emplace_back(l, j);
      found = search(pending, tris, accept);
      pending.pop_back();
      pending.pop_back();
      tris.pop_back();
    }
  }
  pending.emplace_back(i, j);
  return found;
}

constexpr int kMirrorSide[3] = {2, 1, 0};

}  // namespace

SurfaceTriangulation build_triangulation(int g, int k) {
  if (g < 0 || k < 1 || 2 - 2 * g - k >= 0)
    throw PreconditionError("build_triangulation: need g >= 0, k >= 1 and 2-2g-k < 0");
  std::vector<std::string> names;
  if (g == 0) {
    for (int i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
  } else {
    for (int j = 0; j <= 2 * g; ++j) names.push_back("c" + std::to_string(j));
    for (int i = 1; i < k; ++i) names.push_back("q" + std::to_string(i));
  }
  const int m = static_cast<int>(names.size());
  auto mirror_name = [g](const std::string& p) {
    if (p[0] == 'q') return p;
    int j = std::stoi(p.substr(1));
    return "c" + std::to_string((4 * g - j) % (4 * g));
  };

  // Upper side j must carry the colour of upper side 2g-1-j so that the
  // polygon gluing joins triangles of opposite colours.
  std::vector<Tri> chosen;
  auto accept = [&](const std::vector<Tri>& tris) {
    std::vector<std::array<std::pair<int, int>, 3>> inner;
    std::vector<std::pair<int, int>> owner;
    upper_adjacency(tris, m, inner, owner);
    auto col = tree_colouring(inner);
    for (int j = 0; j < 2 * g; ++j)
      if (col[owner[j].first] != col[owner[2 * g - 1 - j].first]) return false;
    chosen = tris;
    return true;
  };
  std::vector<std::pair<int, int>> pending{{0, m - 1}};
  std::vector<Tri> tris;
  if (!search(pending, tris, accept))
    throw InternalError("build_triangulation: no symmetric triangulation with bipartite dual");

  std::vector<std::array<std::pair<int, int>, 3>> inner;
  std::vector<std::pair<int, int>> owner;
  upper_adjacency(chosen, m, inner, owner);
  auto col = tree_colouring(inner);
  const int u = static_cast<int>(chosen.size());

  SurfaceTriangulation out;
  out.g = g;
  out.k = k;
  for (int t = 0; t < u; ++t) {
    auto [a, b, c] = chosen[t];
    out.triangles.push_back({{names[a], names[b], names[c]}, {0, 0, 0}, col[t], true});
  }
  for (int t = 0; t < u; ++t) {
    auto [a, b, c] = chosen[t];
    out.triangles.push_back({{mirror_name(names[a]), mirror_name(names[c]), mirror_name(names[b])},
                             {0, 0, 0},
                             opposite(col[t]),
                             false});
  }
  out.glue.assign(2 * u, {std::pair{-1, -1}, std::pair{-1, -1}, std::pair{-1, -1}});
  auto link = [&](int t1, int s1, int t2, int s2) {
    out.glue[t1][s1] = {t2, s2};
    out.glue[t2][s2] = {t1, s1};
  };
  for (int t = 0; t < u; ++t)
    for (int s = 0; s < 3; ++s) {
      if (auto [t2, s2] = inner[t][s]; t2 >= 0) {
        if (std::pair{t, s} < std::pair{t2, s2}) {
          link(t, s, t2, s2);
          link(u + t, kMirrorSide[s], u + t2, kMirrorSide[s2]);
        }
        continue;
      }
      int b = boundary_side(chosen[t][s], chosen[t][(s + 1) % 3], m);
      if (g > 0 && b < 2 * g) {
        // Upper side b meets lower side b+2g, the mirror of upper side 2g-1-b.
        auto [t2, s2] = owner[2 * g - 1 - b];
        link(t, s, u + t2, kMirrorSide[s2]);
      } else {
        link(t, s, u + t, kMirrorSide[s]);
      }
    }

  UnionFind uf(3 * 2 * u);
  for (int t = 0; t < 2 * u; ++t)
    for (int s = 0; s < 3; ++s) {
      auto [t2, s2] = out.glue[t][s];
      uf.unite(3 * t + s, 3 * t2 + (s2 + 1) % 3);
      uf.unite(3 * t + (s + 1) % 3, 3 * t2 + s2);
    }
  std::map<int, int> cls;
  for (int t = 0; t < 2 * u; ++t)
    for (int s = 0; s < 3; ++s) {
      int r = uf.find(3 * t + s);
      auto it = cls.emplace(r, static_cast<int>(cls.size())).first;
      out.triangles[t].puncture[s] = it->second;
    }
  out.num_punctures = static_cast<int>(cls.size());
  auto problem = validate_triangulation(out);
  if (!problem.empty()) throw InternalError("build_triangulation: " + problem);
  return out;
}

std::string validate_triangulation(const SurfaceTriangulation& tri) {
  const int nt = tri.num_triangles();
  if (nt != 4 * tri.g + 2 * tri.k - 4) return "triangle count " + std::to_string(nt);
  if (static_cast<int>(tri.glue.size()) != nt) return "gluing table size";
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < 3; ++s) {
      auto [t2, s2] = tri.glue[t][s];
      if (t2 < 0 || t2 >= nt || s2 < 0 || s2 > 2) return "unglued side";
      if (tri.glue[t2][s2] != std::pair{t, s}) return "gluing is not an involution";
      if (t2 == t && s2 == s) return "side glued to itself";
      if (tri.triangles[t].color == tri.triangles[t2].color) return "dual graph is not bipartite";
      if (tri.triangles[t].puncture[s] != tri.triangles[t2].puncture[(s2 + 1) % 3]) return "corner classes disagree";
    }
  if (tri.num_punctures != tri.k) return "found " + std::to_string(tri.num_punctures) + " punctures";
  return "";
}

RibbonGraph dual_graph(const SurfaceTriangulation& tri) {
  RibbonGraph g;
  for (const auto& t : tri.triangles) g.add_vertex(t.color, 3);
  for (int t = 0; t < tri.num_triangles(); ++t)
    for (int s = 0; s < 3; ++s) {
      auto [t2, s2] = tri.glue[t][s];
      if (std::pair{t, s} < std::pair{t2, s2}) g.connect(g.half_edge(t, s), g.half_edge(t2, s2));
    }
  g.validate();
  return g;
}

SurfaceInvariants conjugate_surface_invariants(const SurfaceTriangulation& tri) {
  RibbonGraph conj = dual_graph(tri).conjugate();
  SurfaceInvariants inv;
  inv.k_prime = static_cast<int>(faces(conj).size());
  int chi = euler_characteristic(conj);
  if (chi % 2 != 0 || components(conj) != 1) throw InternalError("conjugate surface is not a connected closed surface");
  inv.g_prime = (2 - chi) / 2;
  inv.euler = 2 - 2 * tri.g - tri.k;
  if (2 - 2 * inv.g_prime - inv.k_prime != inv.euler)
    throw InternalError("conjugate surface has a different Euler characteristic");
  return inv;
}

ExponentMatrix eigenvalue_exponent_matrix(const GnGraph& gn, const RibbonGraph& coarse) {
  const auto& g = gn.graph;
  UnionFind tree(g.num_vertices());
  std::vector<int> col(g.num_edges(), -1);
  std::vector<int> cotree;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!tree.unite(g.vertex_of(g.edge_black_half(e)), g.vertex_of(g.edge_white_half(e)))) {
      col[e] = static_cast<int>(cotree.size());
      cotree.push_back(e);
    }
  const int dim = static_cast<int>(cotree.size());

  auto fs = faces(g);
  std::vector<int> face_of(g.num_half_edges());
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int h : fs[f]) face_of[h] = static_cast<int>(f);
  // Cotree edges outside a spanning tree of the dual carry the homology.
  UnionFind dual(static_cast<int>(fs.size()));
  std::vector<int> leftover;
  for (int e : cotree)
    if (!dual.unite(face_of[g.edge_black_half(e)], face_of[g.edge_white_half(e)])) leftover.push_back(e);

  auto coords = [&](const HalfEdgeCycle& c) {
    std::vector<long> v(dim, 0);
    for (int h : c)
      if (int k = col[g.edge_of(h)]; k >= 0) v[k] += g.from_black(h) ? 1 : -1;
    return v;
  };
  IntMatrix basis_t(dim, std::vector<long>(dim, 0));  // basis vectors as columns
  int c = 0;
  for (std::size_t f = 0; f + 1 < fs.size(); ++f, ++c) {
    auto v = coords(fs[f]);
    for (int r = 0; r < dim; ++r) basis_t[r][c] = v[r];
  }
  for (int e : leftover) basis_t[col[e]][c++] = 1;
  if (c != dim) throw InternalError("eigenvalue_exponent_matrix: basis has the wrong size");

  ExponentMatrix em;
  em.faces = static_cast<int>(fs.size()) - 1;
  em.homology = static_cast<int>(leftover.size());
  std::vector<int> coarse_zz(coarse.num_half_edges(), -1);
  auto czz = zigzag_cycles(coarse);
  for (std::size_t z = 0; z < czz.size(); ++z)
    for (int h : czz[z]) coarse_zz[h] = static_cast<int>(z);
  for (auto& z : zigzag_cycles(g)) {
    em.rows.push_back(solve_integral(basis_t, coords(z)));
    int band = -2;
    for (int h : z) {
      int x = gn.crossing[h];
      if (x < 0) continue;
      int id = coarse_zz[x];
      band = band == -2 || band == id ? id : -1;
    }
    em.band.push_back(band < 0 ? -1 : band);
    em.zigzags.push_back(std::move(z));
  }
  return em;
}

IndependenceReport verify_independence(const ExponentMatrix& em) {
  IndependenceReport r;
  r.cycle_dim = em.cycle_dim();
  r.rank = integer_rank(em.rows);
  r.free_count = r.cycle_dim - static_cast<long>(r.rank);
  auto ker = left_kernel(em.rows);
  auto all_ones = [](const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [&](long x) { return x == v.front() && (x == 1 || x == -1); });
  };
  r.product_relation = ker.size() == 1 && all_ones(ker[0]);
  for (const auto& v : ker)
    if (!all_ones(v)) r.kernel_witness = v;
  return r;
}

Report analyze_surface(int g, int k, int n) {
  Report rep;
  auto add = [&](const std::string& id, bool ok, std::string detail) {
    rep.claims.push_back({id, ok, ok ? "" : std::move(detail)});
  };
  auto tri = build_triangulation(g, k);
  const int t = tri.num_triangles();
  add("triangles", t == 4 * g + 2 * k - 4, "T = " + std::to_string(t));

  auto inv = conjugate_surface_invariants(tri);
  add("euler", 2 - 2 * inv.g_prime - inv.k_prime == 2 - 2 * g - k,
      "(g',k') = (" + std::to_string(inv.g_prime) + "," + std::to_string(inv.k_prime) + ")");

  RibbonGraph gsigma = dual_graph(tri);
  RibbonGraph coarse = gsigma.conjugate();
  {
    std::vector<std::vector<int>> z, f;
    for (const auto& c : zigzag_cycles(coarse)) z.push_back(edge_set(coarse, c));
    for (const auto& c : faces(gsigma)) f.push_back(edge_set(gsigma, c));
    std::sort(z.begin(), z.end());
    std::sort(f.begin(), f.end());
    add("coarse_zigzags", static_cast<int>(z.size()) == k && z == f,
        std::to_string(z.size()) + " zig-zags on G, expected the " + std::to_string(k) + " punctures");
  }

  auto gn = build_surface_Gn(coarse, n);
  const long nn = static_cast<long>(n) * n;
  long nfaces = static_cast<long>(faces(gn.graph).size());
  add("faces", nfaces == (nn - 1) * t / 2 + inv.k_prime, "F = " + std::to_string(nfaces));
  long cyc = gn.graph.num_edges() - gn.graph.num_vertices() + 1;
  add("cycle_dim", cyc == nn * (2L * g - 2 + k) + 1, "cycle space dimension " + std::to_string(cyc));

  auto em = eigenvalue_exponent_matrix(gn, coarse);
  {
    std::vector<int> per(k, 0);
    bool ok = static_cast<int>(em.rows.size()) == k * n;
    for (int b : em.band) {
      if (b < 0 || b >= k) {
        ok = false;
      } else {
        ++per[b];
      }
    }
    ok = ok && std::all_of(per.begin(), per.end(), [&](int c) { return c == n; });
    add("bands", ok, std::to_string(em.rows.size()) + " zig-zags; expected " + std::to_string(k) + " bands of " +
                         std::to_string(n));
  }
  add("homology", em.homology == 2 * inv.g_prime, "homology columns " + std::to_string(em.homology));
  auto ind = verify_independence(em);
  std::string witness;
  for (long x : ind.kernel_witness) witness += (witness.empty() ? "" : ",") + std::to_string(x);
  add("rank", ind.rank == static_cast<std::size_t>(k * n - 1) && ind.product_relation,
      "rank " + std::to_string(ind.rank) + ", kernel witness [" + witness + "]");
  long expect = dimension(g, k, n);
  add("free_count", ind.free_count == expect,
      "free count " + std::to_string(ind.free_count) + ", expected " + std::to_string(expect));
  if (g == 0 && k == 3) {
    auto torus = torus_from_weights<Scalar>(n, std::vector<Scalar>(nn, Scalar(1)), std::vector<Scalar>(nn, Scalar(1)));
    add("torus", ribbon_isomorphic(gn.graph, torus.graph) && ind.free_count == static_cast<long>(n - 1) * (n - 2),
        "expanded graph differs from the torus honeycomb");
  }
  return rep;
}

std::string triangulation_to_json(const SurfaceTriangulation& tri) {
  nlohmann::json j;
  j["g"] = tri.g;
  j["k"] = tri.k;
  j["punctures"] = tri.num_punctures;
  j["triangles"] = nlohmann::json::array();
  for (int t = 0; t < tri.num_triangles(); ++t) {
    const auto& tr = tri.triangles[t];
    nlohmann::json glue = nlohmann::json::array();
    for (auto [t2, s2] : tri.glue[t]) glue.push_back({t2, s2});
    j["triangles"].push_back({{"points", tr.point},
                              {"punctures", tr.puncture},
                              {"color", color_name(tr.color)},
                              {"half", tr.upper ? "upper" : "lower"},
                              {"glue", glue}});
  }
  return j.dump(2);
}

}  // namespace isopair
