#include "isopair/ribbon.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace isopair {

using nlohmann::json;

int RibbonGraph::add_vertex(Color c, int degree) {
  if (degree < 1) throw PreconditionError("add_vertex: degree must be positive");
  int v = num_vertices();
  color_.push_back(c);
  degree_.push_back(degree);
  first_.push_back(num_half_edges());
  for (int s = 0; s < degree; ++s) {
    vertex_.push_back(v);
    opp_.push_back(-1);
    edge_.push_back(-1);
  }
  return v;
}

void RibbonGraph::connect(int h1, int h2) {
  if (opp_.at(h1) != -1 || opp_.at(h2) != -1) throw InternalError("connect: half-edge already paired");
  if (color(vertex_of(h1)) == color(vertex_of(h2))) throw InternalError("connect: edge would not be bipartite");
  if (color(vertex_of(h1)) == Color::White) std::swap(h1, h2);
  opp_[h1] = h2;
  opp_[h2] = h1;
  int e = num_edges();
  edge_[h1] = edge_[h2] = e;
  edge_black_.push_back(h1);
  edge_white_.push_back(h2);
}

int RibbonGraph::half_edge(int v, int slot) const {
  if (slot < 0 || slot >= degree(v)) throw DimensionError("half_edge: slot out of range");
  return first_[v] + slot;
}

int RibbonGraph::next_ccw(int h) const {
  int v = vertex_of(h);
  return first_[v] + (slot_of(h) + 1) % degree_[v];
}

int RibbonGraph::next_cw(int h) const {
  int v = vertex_of(h);
  return first_[v] + (slot_of(h) + degree_[v] - 1) % degree_[v];
}

void RibbonGraph::validate() const {
  for (int h = 0; h < num_half_edges(); ++h) {
    if (opp_[h] < 0) throw InternalError("validate: unpaired half-edge " + std::to_string(h));
    if (opp_[opp_[h]] != h || opp_[h] == h) throw InternalError("validate: pairing is not an involution");
    if (color(vertex_of(h)) == color(vertex_of(opp_[h]))) throw InternalError("validate: monochromatic edge");
  }
}

RibbonGraph RibbonGraph::conjugate() const {
  RibbonGraph out;
  for (int v = 0; v < num_vertices(); ++v) out.add_vertex(color_[v], degree_[v]);
  auto image = [&](int h) {
    int v = vertex_of(h);
    if (color_[v] == Color::White) return h;
    int d = degree_[v];
    return first_[v] + (d - slot_of(h)) % d;
  };
  for (int e = 0; e < num_edges(); ++e) out.connect(image(edge_black_[e]), image(edge_white_[e]));
  return out;
}

namespace {

template <class Step>
std::vector<HalfEdgeCycle> orbits(const RibbonGraph& g, Step step) {
  std::vector<bool> seen(g.num_half_edges(), false);
  std::vector<HalfEdgeCycle> out;
  for (int h0 = 0; h0 < g.num_half_edges(); ++h0) {
    if (seen[h0]) continue;
    HalfEdgeCycle c;
    for (int h = h0; !seen[h]; h = step(h)) {
      seen[h] = true;
      c.push_back(h);
    }
    out.push_back(std::move(c));
  }
  return out;
}

template <class Step>
HalfEdgeCycle orbit_through(int h0, Step step) {
  HalfEdgeCycle c{h0};
  for (int h = step(h0); h != h0; h = step(h)) c.push_back(h);
  return c;
}

}  // namespace

std::vector<HalfEdgeCycle> faces(const RibbonGraph& g) {
  return orbits(g, [&](int h) { return g.next_cw(g.opp(h)); });
}

HalfEdgeCycle face_through(const RibbonGraph& g, int h) {
  return orbit_through(h, [&](int x) { return g.next_cw(g.opp(x)); });
}

int zigzag_next(const RibbonGraph& g, int h) {
  int arrive = g.opp(h);
  return g.color(g.vertex_of(arrive)) == Color::White ? g.next_ccw(arrive) : g.next_cw(arrive);
}

std::vector<HalfEdgeCycle> zigzag_cycles(const RibbonGraph& g) {
  return orbits(g, [&](int h) { return zigzag_next(g, h); });
}

HalfEdgeCycle zigzag_through(const RibbonGraph& g, int h) {
  return orbit_through(h, [&](int x) { return zigzag_next(g, x); });
}

HalfEdgeCycle reversed(const RibbonGraph& g, const HalfEdgeCycle& c) {
  HalfEdgeCycle r;
  r.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r.push_back(g.opp(*it));
  return r;
}

int euler_characteristic(const RibbonGraph& g) {
  return g.num_vertices() - g.num_edges() + static_cast<int>(faces(g).size());
}

int components(const RibbonGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = g.num_vertices();
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = find(g.vertex_of(g.edge_black_half(e))), b = find(g.vertex_of(g.edge_white_half(e)));
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

bool ribbon_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges()) return false;
  if (a.num_half_edges() == 0) return true;
  if (components(a) != 1 || components(b) != 1)
    throw PreconditionError("ribbon_isomorphic: graphs must be connected");
  const int h0 = 0;
  for (int target = 0; target < b.num_half_edges(); ++target) {
    std::vector<int> map(a.num_half_edges(), -1), inv(b.num_half_edges(), -1);
    std::deque<std::pair<int, int>> queue{{h0, target}};
    bool ok = true;
    while (ok && !queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (map[x] == y) continue;
      if (map[x] != -1 || inv[y] != -1) {
        ok = false;
        break;
      }
      int vx = a.vertex_of(x), vy = b.vertex_of(y);
      if (a.color(vx) != b.color(vy) || a.degree(vx) != b.degree(vy)) {
        ok = false;
        break;
      }
      map[x] = y;
      inv[y] = x;
      queue.emplace_back(a.next_ccw(x), b.next_ccw(y));
      queue.emplace_back(a.opp(x), b.opp(y));
    }
    if (ok && std::find(map.begin(), map.end(), -1) == map.end()) return true;
  }
  return false;
}

std::vector<int> edge_set(const RibbonGraph& g, const HalfEdgeCycle& c) {
  std::vector<int> e;
  for (int h : c) e.push_back(g.edge_of(h));
  std::sort(e.begin(), e.end());
  return e;
}

std::string ribbon_to_json(const RibbonGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"id", v}, {"color", color_name(g.color(v))}, {"degree", g.degree(v)}});
  j["edges"] = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    int hb = g.edge_black_half(e), hw = g.edge_white_half(e);
    j["edges"].push_back({g.vertex_of(hb), g.slot_of(hb), g.vertex_of(hw), g.slot_of(hw)});
  }
  return j.dump(2);
}

RibbonGraph ribbon_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  RibbonGraph g;
  try {
    for (const auto& v : j.at("vertices")) {
      std::string c = v.at("color").get<std::string>();
      if (c != "black" && c != "white") throw ParseError("graph JSON: bad colour '" + c + "'");
      g.add_vertex(c == "black" ? Color::Black : Color::White, v.at("degree").get<int>());
    }
    for (const auto& e : j.at("edges")) {
      int b = e.at(0).get<int>(), bs = e.at(1).get<int>(), w = e.at(2).get<int>(), ws = e.at(3).get<int>();
      if (b < 0 || b >= g.num_vertices() || w < 0 || w >= g.num_vertices())
        throw ParseError("graph JSON: vertex id out of range");
      g.connect(g.half_edge(b, bs), g.half_edge(w, ws));
    }
    g.validate();
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const InternalError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return g;
}

std::string ribbon_to_dot(const RibbonGraph& g, const std::vector<HalfEdgeCycle>& highlight,
                          const std::vector<std::string>& edge_labels) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};
  std::vector<std::vector<int>> colours(g.num_edges());
  for (std::size_t i = 0; i < highlight.size(); ++i)
    for (int h : highlight[i]) colours[g.edge_of(h)].push_back(static_cast<int>(i));
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, label=\"\", width=0.15];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  v" << v << " [style=filled, fillcolor=" << (g.color(v) == Color::Black ? "black" : "white") << "];\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    os << "  v" << g.vertex_of(g.edge_black_half(e)) << " -- v" << g.vertex_of(g.edge_white_half(e)) << " [";
    bool sep = false;
    if (e < static_cast<int>(edge_labels.size()) && !edge_labels[e].empty()) {
      os << "label=\"" << edge_labels[e] << "\"";
      sep = true;
    }
    if (!colours[e].empty()) {
      if (sep) os << ", ";
      os << "color=\"";
      for (std::size_t k = 0; k < colours[e].size(); ++k)
        os << (k ? ":" : "") << palette[colours[e][k] % (sizeof palette / sizeof *palette)];
      os << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace isopair
