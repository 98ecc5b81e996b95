#pragma once

#include <string>
#include <vector>

#include "isopair/error.hpp"
#include "isopair/scalar.hpp"

namespace isopair {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
inline const char* color_name(Color c) { return c == Color::Black ? "black" : "white"; }

/// Bipartite ribbon graph stored as half-edges. Every vertex owns `degree`
/// consecutive half-edges whose slot numbers 0..degree-1 run counterclockwise.
/// An edge is a pair of half-edges, one at a black and one at a white vertex.
class RibbonGraph {
 public:
  int add_vertex(Color c, int degree);
  /// Joins two free half-edges; they must sit at vertices of opposite colour.
  void connect(int h1, int h2);

  int num_vertices() const { return static_cast<int>(color_.size()); }
  int num_half_edges() const { return static_cast<int>(vertex_.size()); }
  int num_edges() const { return static_cast<int>(edge_black_.size()); }

  Color color(int v) const { return color_.at(v); }
  int degree(int v) const { return degree_.at(v); }
  int half_edge(int v, int slot) const;

  int vertex_of(int h) const { return vertex_.at(h); }
  int slot_of(int h) const { return h - first_.at(vertex_.at(h)); }
  int opp(int h) const { return opp_.at(h); }
  /// Next half-edge counterclockwise around the same vertex.
  int next_ccw(int h) const;
  int next_cw(int h) const;

  int edge_of(int h) const { return edge_.at(h); }
  int edge_black_half(int e) const { return edge_black_.at(e); }
  int edge_white_half(int e) const { return edge_white_.at(e); }
  /// True when the directed half-edge h leaves a black vertex.
  bool from_black(int h) const { return color(vertex_of(h)) == Color::Black; }

  /// Throws InternalError unless every half-edge is paired and edges are bipartite.
  void validate() const;

  /// Reverses the cyclic order at every black vertex; slot s becomes (d - s) mod d.
  RibbonGraph conjugate() const;

 private:
  std::vector<Color> color_;
  std::vector<int> degree_, first_;
  std::vector<int> vertex_, opp_, edge_;
  std::vector<int> edge_black_, edge_white_;
};

/// A closed walk given by its directed half-edges; step h goes from
/// vertex_of(h) to vertex_of(opp(h)).
using HalfEdgeCycle = std::vector<int>;

/// Face orbits of h -> next_cw(opp(h)); each face is traversed with its
/// interior on the left.
std::vector<HalfEdgeCycle> faces(const RibbonGraph& g);
/// The face orbit containing the directed half-edge h.
HalfEdgeCycle face_through(const RibbonGraph& g, int h);

/// Zig-zag successor of h: at a white vertex the next slot counterclockwise,
/// at a black vertex the next slot clockwise.
int zigzag_next(const RibbonGraph& g, int h);
std::vector<HalfEdgeCycle> zigzag_cycles(const RibbonGraph& g);
HalfEdgeCycle zigzag_through(const RibbonGraph& g, int h);

/// The same walk traversed backwards.
HalfEdgeCycle reversed(const RibbonGraph& g, const HalfEdgeCycle& c);

/// V - E + F.
int euler_characteristic(const RibbonGraph& g);
/// Number of connected components.
int components(const RibbonGraph& g);

/// Colour-preserving ribbon isomorphism test (connected graphs).
bool ribbon_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

/// Edge-set of a cycle, sorted; used for orbit comparisons.
std::vector<int> edge_set(const RibbonGraph& g, const HalfEdgeCycle& c);

/// C*-connection over ring R: one weight per edge, read in the black-to-white
/// direction; the opposite direction carries the inverse.
template <class R>
struct Connection {
  std::vector<R> weight;
};

/// Product of weights along a closed walk. Throws PreconditionError when the
/// walk is empty or does not close up.
template <class R>
R monodromy(const RibbonGraph& g, const Connection<R>& c, const HalfEdgeCycle& path) {
  if (path.empty()) throw PreconditionError("monodromy: empty path");
  if (c.weight.size() != static_cast<std::size_t>(g.num_edges()))
    throw DimensionError("monodromy: connection size does not match graph");
  for (std::size_t i = 0; i < path.size(); ++i) {
    int next = path[(i + 1) % path.size()];
    if (g.vertex_of(g.opp(path[i])) != g.vertex_of(next))
      throw PreconditionError("monodromy: walk is not closed at step " + std::to_string(i));
  }
  R acc = c.weight.front().one_like();
  for (int h : path) {
    const R& w = c.weight[g.edge_of(h)];
    if (g.from_black(h)) {
      acc *= w;
    } else {
      acc /= w;
    }
  }
  return acc;
}

/// Multiplies the weight of every edge at v by t (an edge seen twice, as a
/// loop, would be scaled twice; bipartite graphs have none).
template <class R>
Connection<R> gauge_transform(const RibbonGraph& g, const Connection<R>& c, int v, const R& t) {
  if (t.is_zero()) throw PreconditionError("gauge_transform: zero gauge parameter");
  Connection<R> out = c;
  for (int s = 0; s < g.degree(v); ++s) out.weight[g.edge_of(g.half_edge(v, s))] *= t;
  return out;
}

/// Graph JSON: {"vertices":[{"id","color","degree"}], "edges":[[b,bs,w,ws],...]}.
std::string ribbon_to_json(const RibbonGraph& g);
RibbonGraph ribbon_from_json(const std::string& text);

/// DOT export; each cycle in `highlight` is drawn in its own colour.
std::string ribbon_to_dot(const RibbonGraph& g, const std::vector<HalfEdgeCycle>& highlight = {},
                          const std::vector<std::string>& edge_labels = {});

}  // namespace isopair
