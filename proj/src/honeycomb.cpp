#include "isopair/honeycomb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace isopair {

using nlohmann::json;

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::BottomRight: return "bottom-right";
    case Side::TopRight: return "top-right";
    case Side::UpperLeft: return "upper-left";
    case Side::LowerLeft: return "lower-left";
    case Side::Right: return "right";
  }
  return "?";
}

std::vector<Side> sides_ccw(Kind kind) {
  if (kind == Kind::T) return {Side::Left, Side::BottomRight, Side::TopRight};
  return {Side::Right, Side::UpperLeft, Side::LowerLeft};
}

int Piece::find(Color c, Label l) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].color == c && vertices[v].label == l) return static_cast<int>(v);
  return -1;
}

const Piece::Stub& Piece::stub(Side side, int index) const {
  for (const auto& s : stubs)
    if (s.side == side && s.index == index) return s;
  throw DimensionError(std::string("no stub ") + std::to_string(index) + " on side " + side_name(side));
}

int Piece::count(Color c) const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [c](const Vertex& v) { return v.color == c; }));
}

namespace {

Piece t_piece(int n) {
  Piece p{Kind::T, n, {}, {}, {}, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) p.vertices.push_back({Color::Black, {i, j}});
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= i; ++j) p.vertices.push_back({Color::White, {i, j}});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      int v = p.find(Color::Black, {i, j});
      if (j < i) {
        p.edges.push_back({v, p.find(Color::White, {i, j + 1}), EdgeType::Horizontal});
      } else {
        p.stubs.push_back({v, EdgeType::Horizontal, Side::Left, j, j});
      }
      if (i < n) {
        p.edges.push_back({v, p.find(Color::White, {i + 1, j + 1}), EdgeType::SE});
      } else {
        p.stubs.push_back({v, EdgeType::SE, Side::BottomRight, j, n + 1 - j});
      }
      if (j >= 2) {
        p.edges.push_back({v, p.find(Color::White, {i, j}), EdgeType::NE});
      } else {
        p.stubs.push_back({v, EdgeType::NE, Side::TopRight, i, n + 1 - i});
      }
    }
  p.corners = {{p.find(Color::Black, {1, 1}), 2}, {p.find(Color::Black, {n, n}), 0}, {p.find(Color::Black, {n, 1}), 1}};
  return p;
}

Piece tprime_piece(int n) {
  Piece p{Kind::TPrime, n, {}, {}, {}, {}};
  for (int x = 0; x <= n - 2; ++x)
    for (int y = 0; x + y <= n - 2; ++y) p.vertices.push_back({Color::Black, {x, y}});
  for (int x = 0; x <= n - 1; ++x)
    for (int y = 0; x + y <= n - 1; ++y) p.vertices.push_back({Color::White, {x, y}});
  for (int x = 0; x <= n - 2; ++x)
    for (int y = 0; x + y <= n - 2; ++y) {
      int v = p.find(Color::Black, {x, y});
      p.edges.push_back({v, p.find(Color::White, {x, y}), EdgeType::Horizontal});
      p.edges.push_back({v, p.find(Color::White, {x + 1, y}), EdgeType::SE});
      p.edges.push_back({v, p.find(Color::White, {x, y + 1}), EdgeType::NE});
    }
  for (int x = 0; x <= n - 1; ++x)
    for (int y = 0; x + y <= n - 1; ++y) {
      int w = p.find(Color::White, {x, y});
      if (x + y == n - 1) p.stubs.push_back({w, EdgeType::Horizontal, Side::Right, x + 1, n - x});
      if (x == 0) p.stubs.push_back({w, EdgeType::SE, Side::UpperLeft, n - y, n - y});
      if (y == 0) p.stubs.push_back({w, EdgeType::NE, Side::LowerLeft, x + 1, x + 1});
    }
  p.corners = {{p.find(Color::White, {0, n - 1}), 0}, {p.find(Color::White, {0, 0}), 1},
               {p.find(Color::White, {n - 1, 0}), 2}};
  return p;
}

}  // namespace

Piece triangle_piece(Kind kind, int n) {
  if (n < 1) throw PreconditionError("triangle size must be at least 1");
  return kind == Kind::T ? t_piece(n) : tprime_piece(n);
}

std::vector<Label> black_labels(Kind kind, int n) {
  std::vector<Label> out;
  if (kind == Kind::T) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) out.emplace_back(i, j);
  } else {
    for (int x = 0; x <= n - 2; ++x)
      for (int y = 0; x + y <= n - 2; ++y) out.emplace_back(x, y);
  }
  return out;
}

template <class R>
R TriangleNetwork<R>::weight(Label l, EdgeType t) const {
  switch (t) {
    case EdgeType::Horizontal: return like();
    case EdgeType::SE: return b.at(l);
    case EdgeType::NE: return a.at(l);
  }
  throw InternalError("bad edge type");
}

template <class R>
TriangleNetwork<R> build_triangle(Kind kind, int n, std::map<Label, R> a, std::map<Label, R> b) {
  if (n < 1) throw PreconditionError("build_triangle: n must be at least 1");
  auto labels = black_labels(kind, n);
  if (a.size() != labels.size() || b.size() != labels.size())
    throw PreconditionError("build_triangle: expected " + std::to_string(labels.size()) + " weights of each kind");
  for (const auto& l : labels) {
    auto ia = a.find(l), ib = b.find(l);
    if (ia == a.end() || ib == b.end())
      throw PreconditionError("build_triangle: missing weight at (" + std::to_string(l.first) + "," +
                              std::to_string(l.second) + ")");
    if (ia->second.is_zero() || ib->second.is_zero())
      throw PreconditionError("build_triangle: zero weight at (" + std::to_string(l.first) + "," +
                              std::to_string(l.second) + ")");
  }
  TriangleNetwork<R> t;
  t.kind = kind;
  t.n = n;
  t.a = std::move(a);
  t.b = std::move(b);
  return t;
}

template <class R>
TriangleNetwork<R> constant_triangle(Kind kind, int n, const R& value) {
  std::map<Label, R> a, b;
  for (const auto& l : black_labels(kind, n)) a[l] = b[l] = value;
  return build_triangle(kind, n, std::move(a), std::move(b));
}

std::string weight_name(char letter, Label l) {
  std::string s(1, letter);
  s += "_{";
  if (l.first < 10 && l.second < 10 && l.first >= 0 && l.second >= 0) {
    s += std::to_string(l.first) + std::to_string(l.second);
  } else {
    s += std::to_string(l.first) + "," + std::to_string(l.second);
  }
  return s + "}";
}

TriangleNetwork<Laurent> symbolic_triangle(Kind kind, int n) {
  std::map<Label, Laurent> a, b;
  for (const auto& l : black_labels(kind, n)) {
    a[l] = Laurent::variable(weight_name('a', l));
    b[l] = Laurent::variable(weight_name('b', l));
  }
  return build_triangle(kind, n, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Torus

Label torus_label(Kind kind, Color c, Label l, int n) {
  auto m = [n](int v) { return ((v % n) + n) % n; };
  if (kind == Kind::T) {
    if (c == Color::Black) return {m(l.first - 1), m(1 - l.second)};
    return {m(l.first - 1), m(2 - l.second)};
  }
  return {m(l.first), m(l.second + 1)};
}

template <class R>
int TorusNetwork<R>::black(int x, int y) const {
  return mod(x) * n + mod(y);
}

template <class R>
int TorusNetwork<R>::white(int x, int y) const {
  return n * n + mod(x) * n + mod(y);
}

template <class R>
Connection<R> TorusNetwork<R>::connection() const {
  Connection<R> c;
  c.weight.resize(3 * n * n, a.front().one_like());
  for (int v = 0; v < n * n; ++v) {
    c.weight[3 * v + 1] = b[v];
    c.weight[3 * v + 2] = a[v];
  }
  return c;
}

template <class R>
HalfEdgeCycle TorusNetwork<R>::face(int x, int y) const {
  return face_through(graph, graph.half_edge(black(x, y), static_cast<int>(EdgeType::SE)));
}

template <class R>
HalfEdgeCycle TorusNetwork<R>::gamma_x() const {
  return zigzag_through(graph, graph.half_edge(black(0, 0), static_cast<int>(EdgeType::NE)));
}

template <class R>
HalfEdgeCycle TorusNetwork<R>::gamma_y() const {
  return reversed(graph, zigzag_through(graph, graph.half_edge(black(0, 0), static_cast<int>(EdgeType::Horizontal))));
}

namespace {

RibbonGraph coordinate_torus(int n) {
  RibbonGraph g;
  for (int v = 0; v < n * n; ++v) g.add_vertex(Color::Black, 3);
  for (int v = 0; v < n * n; ++v) g.add_vertex(Color::White, 3);
  auto white = [n](int x, int y) { return n * n + ((x % n + n) % n) * n + ((y % n + n) % n); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = x * n + y;
      g.connect(g.half_edge(v, 0), g.half_edge(white(x, y), 0));
      g.connect(g.half_edge(v, 1), g.half_edge(white(x + 1, y), 1));
      g.connect(g.half_edge(v, 2), g.half_edge(white(x, y + 1), 2));
    }
  g.validate();
  return g;
}

}  // namespace

template <class R>
std::vector<Label> TorusNetwork<R>::puncture_faces() const {
  std::set<int> corner_half_edges;
  for (Kind kind : {Kind::T, Kind::TPrime}) {
    Piece p = triangle_piece(kind, n);
    for (auto [v, s] : p.corners) {
      auto [x, y] = torus_label(kind, p.vertices[v].color, p.vertices[v].label, n);
      int id = p.vertices[v].color == Color::Black ? black(x, y) : white(x, y);
      corner_half_edges.insert(graph.half_edge(id, s));
    }
  }
  std::vector<Label> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto f = face(x, y);
      if (std::any_of(f.begin(), f.end(), [&](int h) { return corner_half_edges.count(h) > 0; })) out.emplace_back(x, y);
    }
  return out;
}

template <class R>
TorusZigZags<R> torus_zigzags(const TorusNetwork<R>& net) {
  const int n = net.n;
  const auto& g = net.graph;
  auto conn = net.connection();
  TorusZigZags<R> z;
  R one = net.a.front().one_like();
  z.ne.assign(n, one);
  z.se.assign(n, one);
  z.s.assign(n, one);
  z.ne_cycles.resize(n);
  z.se_cycles.resize(n);
  z.s_cycles.resize(n);
  std::vector<int> seen_ne(n, 0), seen_se(n, 0), seen_s(n, 0);
  for (const auto& c : zigzag_cycles(g)) {
    std::set<int> types;
    int bv = -1;
    for (int h : c) {
      types.insert(g.slot_of(h));
      if (g.from_black(h)) bv = g.vertex_of(h);
    }
    if (bv < 0 || types.size() != 2) throw InternalError("torus_zigzags: unexpected orbit shape");
    int x = bv / n, y = bv % n;
    if (types == std::set<int>{0, 2}) {
      if (seen_ne[x]++) throw InternalError("torus_zigzags: two NE orbits in one row");
      z.ne[x] = monodromy(g, conn, c);
      z.ne_cycles[x] = c;
    } else if (types == std::set<int>{0, 1}) {
      if (seen_se[y]++) throw InternalError("torus_zigzags: two SE orbits in one column");
      auto r = reversed(g, c);
      z.se[y] = monodromy(g, conn, r);
      z.se_cycles[y] = r;
    } else {
      int k = (x + y) % n;
      if (seen_s[k]++) throw InternalError("torus_zigzags: two S orbits on one antidiagonal");
      z.s[k] = monodromy(g, conn, c);
      z.s_cycles[k] = c;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen_ne[i] || !seen_se[i] || !seen_s[i]) throw InternalError("torus_zigzags: missing orbit");
  return z;
}

// ---------------------------------------------------------------------------
// Cell expansion

RibbonGraph theta_graph() {
  RibbonGraph g;
  int b = g.add_vertex(Color::Black, 3), w = g.add_vertex(Color::White, 3);
  for (int s = 0; s < 3; ++s) g.connect(g.half_edge(b, s), g.half_edge(w, s));
  return g;
}

GnGraph bigon_expand(const RibbonGraph& g, int n) {
  if (n < 1) throw PreconditionError("bigon_expand: n must be at least 1");
  g.validate();
  GnGraph out;
  out.n = n;
  auto& gn = out.graph;
  // side_stub[v][slot][p-1] = half-edge of G_n leaving cell v through that side.
  std::vector<std::vector<std::vector<int>>> side_stub(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    side_stub[v].assign(d, std::vector<int>(n, -1));
    if (d == 3) {
      Kind kind = g.color(v) == Color::Black ? Kind::T : Kind::TPrime;
      Piece p = triangle_piece(kind, n);
      std::vector<int> id(p.vertices.size());
      for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        id[k] = gn.add_vertex(p.vertices[k].color, 3);
        out.cell.push_back(v);
        out.label.push_back(p.vertices[k].label);
      }
      for (const auto& e : p.edges) {
        int s = static_cast<int>(e.type);
        gn.connect(gn.half_edge(id[e.black], s), gn.half_edge(id[e.white], s));
      }
      auto sides = sides_ccw(kind);
      for (const auto& st : p.stubs) {
        int slot = static_cast<int>(std::find(sides.begin(), sides.end(), st.side) - sides.begin());
        side_stub[v][slot][st.position - 1] = gn.half_edge(id[st.vertex], static_cast<int>(st.type));
      }
      for (auto [pv, s] : p.corners) out.corner.push_back(gn.half_edge(id[pv], s));
    } else if (d == 2) {
      for (int p = 1; p <= n; ++p) {
        int mid = gn.add_vertex(g.color(v), 2);
        out.cell.push_back(v);
        out.label.emplace_back(p, 0);
        side_stub[v][0][p - 1] = gn.half_edge(mid, 0);
        side_stub[v][1][n - p] = gn.half_edge(mid, 1);
      }
    } else {
      throw PreconditionError("bigon_expand: vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                              "; only triangles and bigons are supported");
    }
  }
  out.crossing.assign(0, -1);
  std::vector<std::pair<int, int>> cross;
  for (int e = 0; e < g.num_edges(); ++e) {
    int hb = g.edge_black_half(e), hw = g.edge_white_half(e);
    int vb = g.vertex_of(hb), sb = g.slot_of(hb), vw = g.vertex_of(hw), sw = g.slot_of(hw);
    for (int p = 1; p <= n; ++p) {
      int x = side_stub[vb][sb][p - 1], y = side_stub[vw][sw][n - p];
      gn.connect(x, y);
      cross.emplace_back(x, hb);
      cross.emplace_back(y, hw);
    }
  }
  gn.validate();
  out.crossing.assign(gn.num_half_edges(), -1);
  for (auto [x, h] : cross) out.crossing[x] = h;
  std::set<int> corners(out.corner.begin(), out.corner.end());
  auto fs = faces(gn);
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (std::any_of(fs[f].begin(), fs[f].end(), [&](int h) { return corners.count(h) > 0; }))
      out.puncture_faces.push_back(static_cast<int>(f));
  return out;
}

GnGraph build_surface_Gn(const RibbonGraph& g, int n) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 3) throw PreconditionError("build_surface_Gn: coarse graph must be trivalent");
  return bigon_expand(g, n);
}

template <class R>
TorusNetwork<R> glue_torus(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp) {
  if (t.kind != Kind::T || tp.kind != Kind::TPrime) throw PreconditionError("glue_torus: expects (T, T') cells");
  if (t.n != tp.n) throw PreconditionError("glue_torus: cell sizes differ");
  const int n = t.n;
  GnGraph glued = build_surface_Gn(theta_graph(), n);
  auto kind_of = [&](int v) { return glued.cell[v] == 0 ? Kind::T : Kind::TPrime; };
  // Map glued vertices to torus coordinates and compare adjacency with the model.
  std::vector<int> to_model(glued.graph.num_vertices(), -1);
  std::vector<int> used(2 * n * n, 0);
  for (int v = 0; v < glued.graph.num_vertices(); ++v) {
    Color c = glued.graph.color(v);
    auto [x, y] = torus_label(kind_of(v), c, glued.label[v], n);
    int id = (c == Color::Black ? 0 : n * n) + x * n + y;
    if (used[id]++) throw InternalError("glue_torus: torus coordinates collide");
    to_model[v] = id;
  }
  RibbonGraph model = coordinate_torus(n);
  for (int v = 0; v < glued.graph.num_vertices(); ++v) {
    for (int s = 0; s < 3; ++s) {
      int h = glued.graph.half_edge(v, s);
      int u = glued.graph.vertex_of(glued.graph.opp(h));
      int mh = model.half_edge(to_model[v], s);
      if (model.vertex_of(model.opp(mh)) != to_model[u] || model.slot_of(model.opp(mh)) != glued.graph.slot_of(glued.graph.opp(h)))
        throw InternalError("glue_torus: glued cells disagree with the torus model");
    }
  }
  TorusNetwork<R> net;
  net.n = n;
  net.graph = std::move(model);
  net.t = t;
  net.tp = tp;
  R one = t.like();
  net.a.assign(n * n, one);
  net.b.assign(n * n, one);
  std::vector<int> filled(n * n, 0);
  for (const auto* cell : {&t, &tp}) {
    for (const auto& l : black_labels(cell->kind, n)) {
      auto [x, y] = torus_label(cell->kind, Color::Black, l, n);
      net.a[x * n + y] = cell->a.at(l);
      net.b[x * n + y] = cell->b.at(l);
      ++filled[x * n + y];
    }
  }
  for (int f : filled)
    if (f != 1) throw InternalError("glue_torus: cells do not tile the torus");
  return net;
}

template <class R>
TorusNetwork<R> torus_from_weights(int n, std::vector<R> a, std::vector<R> b) {
  if (n < 1 || a.size() != static_cast<std::size_t>(n * n) || b.size() != a.size())
    throw DimensionError("torus_from_weights: expected n*n weights of each kind");
  std::map<Label, R> ta, tb, pa, pb;
  for (const auto& l : black_labels(Kind::T, n)) {
    auto [x, y] = torus_label(Kind::T, Color::Black, l, n);
    ta[l] = a[x * n + y];
    tb[l] = b[x * n + y];
  }
  for (const auto& l : black_labels(Kind::TPrime, n)) {
    auto [x, y] = torus_label(Kind::TPrime, Color::Black, l, n);
    pa[l] = a[x * n + y];
    pb[l] = b[x * n + y];
  }
  return glue_torus(build_triangle(Kind::T, n, std::move(ta), std::move(tb)),
                    build_triangle(Kind::TPrime, n, std::move(pa), std::move(pb)));
}

template <class R>
std::string torus_to_json(const TorusNetwork<R>& net) {
  const int n = net.n;
  json j;
  j["n"] = n;
  j["graph"] = json::parse(ribbon_to_json(net.graph));
  auto cells = json::array();
  for (const auto* cell : {&net.t, &net.tp}) {
    json c;
    c["kind"] = cell->kind == Kind::T ? "T" : "T'";
    c["weights"] = json::array();
    for (const auto& l : black_labels(cell->kind, n)) {
      auto [x, y] = torus_label(cell->kind, Color::Black, l, n);
      c["weights"].push_back({{"label", {l.first, l.second}},
                              {"torus", {x, y}},
                              {"a", cell->a.at(l).str()},
                              {"b", cell->b.at(l).str()}});
    }
    cells.push_back(c);
  }
  j["cells"] = cells;
  auto face_grid = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto f = net.face(x, y);
      face_grid.push_back({{"label", {x, y}}, {"edges", edge_set(net.graph, f)}});
    }
  j["faces"] = face_grid;
  j["gamma_x"] = edge_set(net.graph, net.gamma_x());
  j["gamma_y"] = edge_set(net.graph, net.gamma_y());
  auto punct = json::array();
  for (auto [x, y] : net.puncture_faces()) punct.push_back({x, y});
  j["puncture_faces"] = punct;
  return j.dump(2);
}

template <class R>
std::string torus_to_dot(const TorusNetwork<R>& net, bool with_zigzags) {
  std::vector<std::string> labels(net.graph.num_edges());
  for (int v = 0; v < net.n * net.n; ++v) {
    labels[3 * v + 1] = net.b[v].str();
    labels[3 * v + 2] = net.a[v].str();
  }
  std::vector<HalfEdgeCycle> highlight;
  if (with_zigzags) highlight = zigzag_cycles(net.graph);
  return ribbon_to_dot(net.graph, highlight, labels);
}

#define ISOPAIR_INSTANTIATE(R)                                                                          \
  template struct TriangleNetwork<R>;                                                                   \
  template struct TorusNetwork<R>;                                                                      \
  template TriangleNetwork<R> build_triangle<R>(Kind, int, std::map<Label, R>, std::map<Label, R>);     \
  template TriangleNetwork<R> constant_triangle<R>(Kind, int, const R&);                                \
  template TorusZigZags<R> torus_zigzags<R>(const TorusNetwork<R>&);                                    \
  template TorusNetwork<R> glue_torus<R>(const TriangleNetwork<R>&, const TriangleNetwork<R>&);         \
  template TorusNetwork<R> torus_from_weights<R>(int, std::vector<R>, std::vector<R>);                  \
  template std::string torus_to_json<R>(const TorusNetwork<R>&);                                        \
  template std::string torus_to_dot<R>(const TorusNetwork<R>&, bool);

ISOPAIR_INSTANTIATE(Scalar)
ISOPAIR_INSTANTIATE(Laurent)

#undef ISOPAIR_INSTANTIATE

}  // namespace isopair
