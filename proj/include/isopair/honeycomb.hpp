#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isopair/laurent.hpp"
#include "isopair/ribbon.hpp"
#include "isopair/scalar.hpp"

namespace isopair {

/// T is the triangle whose left side receives horizontal edges; T' (TPrime)
/// is the complementary triangle whose right side emits them.
enum class Kind { T, TPrime };

/// Edge direction at its black endpoint. The value doubles as the slot index
/// at both endpoints: black slots 0=W,1=SE,2=NE and white slots 0=E,1=NW,2=SW.
enum class EdgeType { Horizontal = 0, SE = 1, NE = 2 };

enum class Side { Left, BottomRight, TopRight, UpperLeft, LowerLeft, Right };

const char* side_name(Side s);
/// Sides of a triangle in counterclockwise order; position k matches ribbon
/// slot k of the corresponding vertex in the coarse graph.
std::vector<Side> sides_ccw(Kind kind);

using Label = std::pair<int, int>;

/// Explicit combinatorics of H_T or H_T'. Vertices carry their triangle labels:
/// in T, black (i,j) for 1<=j<=i<=n and interior white (i,j) for 2<=j<=i;
/// in T', black (x,y) for x+y<=n-2 and white (x,y) for x+y<=n-1.
struct Piece {
  struct Vertex {
    Color color;
    Label label;
  };
  struct Edge {
    int black, white;
    EdgeType type;
  };
  /// An edge leaving the triangle. `position` is the 1-based counterclockwise
  /// position along its side; `index` is the side label used by the matrices.
  struct Stub {
    int vertex;
    EdgeType type;
    Side side;
    int index;
    int position;
  };

  Kind kind;
  int n;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Stub> stubs;
  /// Exterior corner angles as (vertex, slot): the angle runs counterclockwise
  /// from that slot to the next one.
  std::vector<std::pair<int, int>> corners;

  int find(Color c, Label l) const;
  const Stub& stub(Side side, int index) const;
  int count(Color c) const;
};

Piece triangle_piece(Kind kind, int n);

/// Weighted honeycomb triangle. Weights are attached to black vertices:
/// a on the NE edge, b on the SE edge, 1 on the horizontal edge.
template <class R>
struct TriangleNetwork {
  Kind kind = Kind::T;
  int n = 0;
  std::map<Label, R> a, b;

  R like() const { return a.empty() ? R(1) : a.begin()->second.one_like(); }
  /// Weight of an edge of the given type at the black vertex with label l.
  R weight(Label l, EdgeType t) const;
};

/// Black labels of a triangle in a fixed order (row-major on the labels).
std::vector<Label> black_labels(Kind kind, int n);

/// Validates label coverage and non-vanishing weights; throws PreconditionError.
template <class R>
TriangleNetwork<R> build_triangle(Kind kind, int n, std::map<Label, R> a, std::map<Label, R> b);

template <class R>
TriangleNetwork<R> constant_triangle(Kind kind, int n, const R& value);

/// Symbolic weights named a_{ij}, b_{ij} (T labels are 1-based, T' 0-based);
/// two-digit indices are separated by a comma.
TriangleNetwork<Laurent> symbolic_triangle(Kind kind, int n);
std::string weight_name(char letter, Label l);

/// The torus graph G_n in torus coordinates (x,y) mod n. Black (x,y) joins
/// white (x,y) horizontally, white (x+1,y) by its SE edge and white (x,y+1)
/// by its NE edge.
template <class R>
struct TorusNetwork {
  int n = 0;
  RibbonGraph graph;
  std::vector<R> a, b;  // indexed x*n+y
  TriangleNetwork<R> t, tp;

  int black(int x, int y) const;
  int white(int x, int y) const;
  /// Edge id of the edge of type `type` at black (x,y).
  int edge(int x, int y, EdgeType type) const { return 3 * (mod(x) * n + mod(y)) + static_cast<int>(type); }
  Connection<R> connection() const;

  /// Face X_{x,y}: the hexagon east of black (x,y), traversed counterclockwise.
  HalfEdgeCycle face(int x, int y) const;
  /// NE zig-zag of row 0 and (reversed) SE zig-zag of column 0.
  HalfEdgeCycle gamma_x() const;
  HalfEdgeCycle gamma_y() const;
  /// Faces that contain a corner of one of the two triangles.
  std::vector<Label> puncture_faces() const;

  int mod(int v) const { return ((v % n) + n) % n; }
};

/// Torus position of triangle labels.
Label torus_label(Kind kind, Color c, Label l, int n);

/// Zig-zag monodromies in the three families, read off actual zig-zag orbits:
/// ne[x] for row x, se[y] for column y (reversed orbit), s[k] for the
/// antidiagonal x+y = k. Eigenvalue conventions: alpha_i = ne[i-1],
/// beta_j = se[(1-j) mod n], gamma_i = (-1)^{n+1} s[(-i) mod n].
template <class R>
struct TorusZigZags {
  std::vector<R> ne, se, s;
  std::vector<HalfEdgeCycle> ne_cycles, se_cycles, s_cycles;
};

template <class R>
TorusZigZags<R> torus_zigzags(const TorusNetwork<R>& net);

/// Glues H_T and H_T' into G_n (left <-> right, top-right <-> lower-left,
/// bottom-right <-> upper-left, index i to index i) and checks the result
/// against the coordinate model.
template <class R>
TorusNetwork<R> glue_torus(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp);

/// Builds the network from torus weights, splitting them into the two cells.
template <class R>
TorusNetwork<R> torus_from_weights(int n, std::vector<R> a, std::vector<R> b);

/// Result of replacing each vertex of a coarse graph G by a honeycomb cell.
struct GnGraph {
  RibbonGraph graph;
  int n = 0;
  std::vector<int> cell;           // per vertex: the vertex of G it came from
  std::vector<Label> label;        // per vertex: label inside the cell
  std::vector<int> crossing;       // per half-edge: the half-edge of G it crosses along, or -1
  std::vector<int> corner;         // outgoing half-edges marking triangle corners
  std::vector<int> puncture_faces; // indices into faces(graph)
};

/// Black trivalent vertices of G become H_T (sides [left, bottom-right,
/// top-right] at slots 0,1,2), white ones H_T' (sides [right, upper-left,
/// lower-left]); divalent vertices become n parallel two-edge strands. Sides
/// are glued by counterclockwise position p <-> n+1-p.
GnGraph bigon_expand(const RibbonGraph& g, int n);
/// As bigon_expand, but every vertex of g must be trivalent.
GnGraph build_surface_Gn(const RibbonGraph& g, int n);

/// The two-vertex, three-edge torus graph G_1 with black slot s joined to white slot s.
RibbonGraph theta_graph();

template <class R>
std::string torus_to_json(const TorusNetwork<R>& net);
template <class R>
std::string torus_to_dot(const TorusNetwork<R>& net, bool with_zigzags);

}  // namespace isopair
