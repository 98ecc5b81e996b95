#include "isopair/transfer.hpp"

#include <functional>
#include <optional>
#include <queue>
#include <sstream>

namespace isopair {

PathFamily left_turn_family(Kind kind) {
  if (kind == Kind::T) return {Orientation::E, Side::Left, Side::TopRight, true, true};
  return {Orientation::E, Side::UpperLeft, Side::Right, false, false};
}

PathFamily right_turn_family(Kind kind) {
  if (kind == Kind::T) return {Orientation::E, Side::Left, Side::BottomRight, true, true};
  return {Orientation::E, Side::LowerLeft, Side::Right, false, false};
}

PathFamily sw_family(Kind kind) {
  if (kind == Kind::T) return {Orientation::SW, Side::TopRight, Side::BottomRight, true, true};
  return {Orientation::SW, Side::UpperLeft, Side::LowerLeft, false, false};
}

namespace {

// True when an edge of this type is crossed black-to-white.
bool black_to_white(Orientation o, EdgeType type) {
  if (o == Orientation::E) return type != EdgeType::Horizontal;
  return type != EdgeType::NE;
}

template <class R>
std::vector<int> topological_order(const std::vector<std::vector<typename PathDag<R>::Arc>>& out) {
  std::vector<int> indeg(out.size(), 0), order;
  for (const auto& arcs : out)
    for (const auto& a : arcs) ++indeg[a.to];
  std::queue<int> ready;
  for (std::size_t v = 0; v < out.size(); ++v)
    if (indeg[v] == 0) ready.push(static_cast<int>(v));
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const auto& a : out[v])
      if (--indeg[a.to] == 0) ready.push(a.to);
  }
  if (order.size() != out.size()) throw InternalError("path_dag: orientation has a directed cycle");
  return order;
}

template <class R>
void add_arc(PathDag<R>& dag, int black, int white, EdgeType type, Orientation o, const R& w, bool is_stub) {
  if (black_to_white(o, type)) {
    dag.out[black].push_back({white, w, is_stub});
  } else {
    dag.out[white].push_back({black, w.inverse(), is_stub});
  }
}

template <class R>
int source_port(const PathDag<R>& dag, Side side, int index) {
  const auto& pc = dag.piece;
  for (std::size_t k = 0; k < pc.stubs.size(); ++k)
    if (pc.stubs[k].side == side && pc.stubs[k].index == index) {
      int p = dag.port[k];
      if (dag.out[p].empty()) throw InternalError(std::string("side ") + side_name(side) + " is not a path source");
      return p;
    }
  throw DimensionError("no port on requested side");
}

template <class R>
int target_port(const PathDag<R>& dag, Side side, int index) {
  const auto& pc = dag.piece;
  for (std::size_t k = 0; k < pc.stubs.size(); ++k)
    if (pc.stubs[k].side == side && pc.stubs[k].index == index) {
      int p = dag.port[k];
      if (!dag.out[p].empty()) throw InternalError(std::string("side ") + side_name(side) + " is not a path target");
      return p;
    }
  throw DimensionError("no port on requested side");
}

}  // namespace

template <class R>
PathDag<R> path_dag(const TriangleNetwork<R>& t, Orientation o) {
  PathDag<R> dag;
  dag.piece = triangle_piece(t.kind, t.n);
  const auto& pc = dag.piece;
  const int nv = static_cast<int>(pc.vertices.size());
  dag.out.resize(nv + pc.stubs.size());
  const R one = t.like();
  for (const auto& e : pc.edges)
    add_arc(dag, e.black, e.white, e.type, o, t.weight(pc.vertices[e.black].label, e.type), false);
  for (std::size_t k = 0; k < pc.stubs.size(); ++k) {
    const auto& s = pc.stubs[k];
    int port = nv + static_cast<int>(k);
    dag.port.push_back(port);
    if (pc.vertices[s.vertex].color == Color::Black) {
      add_arc(dag, s.vertex, port, s.type, o, t.weight(pc.vertices[s.vertex].label, s.type), true);
    } else {
      // The far end belongs to the neighbouring cell; its weight is not part of this triangle.
      add_arc(dag, port, s.vertex, s.type, o, one, true);
    }
  }
  dag.order = topological_order<R>(dag.out);
  return dag;
}

template <class R>
Matrix<R> path_matrix(const TriangleNetwork<R>& t, const PathFamily& f) {
  const int n = t.n;
  auto dag = path_dag(t, f.orientation);
  const R zero = t.like().zero_like();
  Matrix<R> m(n, n, zero);
  std::vector<int> targets(n);
  std::vector<bool> is_target(dag.out.size(), false);
  for (int i = 1; i <= n; ++i) {
    targets[i - 1] = target_port(dag, f.target, i);
    is_target[targets[i - 1]] = true;
  }
  for (int j = 1; j <= n; ++j) {
    int src = source_port(dag, f.source, j);
    std::vector<std::optional<R>> val(dag.out.size());
    val[src] = t.like();
    for (int u : dag.order) {
      if (!val[u]) continue;
      for (const auto& arc : dag.out[u]) {
        bool keep = true;
        if (arc.is_stub && u == src) keep = f.include_first;
        if (arc.is_stub && is_target[arc.to]) keep = f.include_last;
        R contrib = keep ? *val[u] * arc.weight : *val[u];
        if (val[arc.to]) {
          *val[arc.to] += contrib;
        } else {
          val[arc.to] = contrib;
        }
      }
    }
    for (int i = 1; i <= n; ++i)
      if (val[targets[i - 1]]) m(i - 1, j - 1) = *val[targets[i - 1]];
  }
  return m;
}

namespace {

template <class R, class Visit>
void enumerate_paths(const PathDag<R>& dag, int src, const std::vector<bool>& is_target, const PathFamily& f,
                     const R& one, Visit&& visit) {
  // Iterative-deepening is unnecessary: the DAG is acyclic, so plain recursion terminates.
  std::function<void(int, const R&)> dfs = [&](int u, const R& acc) {
    if (is_target[u]) {
      visit(u, acc);
      return;
    }
    for (const auto& arc : dag.out[u]) {
      bool keep = true;
      if (arc.is_stub && u == src) keep = f.include_first;
      if (arc.is_stub && is_target[arc.to]) keep = f.include_last;
      dfs(arc.to, keep ? acc * arc.weight : acc);
    }
  };
  dfs(src, one);
}

}  // namespace

template <class R>
Matrix<R> path_matrix_bruteforce(const TriangleNetwork<R>& t, const PathFamily& f) {
  const int n = t.n;
  auto dag = path_dag(t, f.orientation);
  Matrix<R> m(n, n, t.like().zero_like());
  std::vector<bool> is_target(dag.out.size(), false);
  std::vector<int> row(dag.out.size(), -1);
  for (int i = 1; i <= n; ++i) {
    int p = target_port(dag, f.target, i);
    is_target[p] = true;
    row[p] = i - 1;
  }
  for (int j = 1; j <= n; ++j) {
    int src = source_port(dag, f.source, j);
    enumerate_paths(dag, src, is_target, f, t.like(), [&](int port, const R& w) { m(row[port], j - 1) += w; });
  }
  return m;
}

std::vector<std::vector<long>> path_counts(Kind kind, int n, const PathFamily& f) {
  auto t = constant_triangle<Scalar>(kind, n, Scalar(1));
  auto dag = path_dag(t, f.orientation);
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  std::vector<bool> is_target(dag.out.size(), false);
  std::vector<int> row(dag.out.size(), -1);
  for (int i = 1; i <= n; ++i) {
    int p = target_port(dag, f.target, i);
    is_target[p] = true;
    row[p] = i - 1;
  }
  for (int j = 1; j <= n; ++j) {
    int src = source_port(dag, f.source, j);
    enumerate_paths(dag, src, is_target, f, Scalar(1), [&](int port, const Scalar&) { ++c[row[port]][j - 1]; });
  }
  return c;
}

template <class R>
Matrix<R> left_turn_matrix(const TriangleNetwork<R>& t) {
  return path_matrix(t, left_turn_family(t.kind));
}

template <class R>
Matrix<R> right_turn_matrix(const TriangleNetwork<R>& t) {
  return path_matrix(t, right_turn_family(t.kind));
}

template <class R>
Matrix<R> d_matrix_algebraic(const TriangleNetwork<R>& t) {
  auto l = left_turn_matrix(t), r = right_turn_matrix(t);
  if (t.kind == Kind::T) return r * triangular_inverse(l);
  return triangular_inverse(r) * l;
}

template <class R>
Matrix<R> d_matrix_combinatorial(const TriangleNetwork<R>& t, SignConvention sign) {
  auto m = path_matrix(t, sw_family(t.kind));
  const int n = t.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int e;
      if (t.kind == Kind::T) {
        e = sign == SignConvention::Standard ? j + n : i + n;
      } else {
        e = sign == SignConvention::Standard ? i + 1 : j + 1;
      }
      if (e % 2) m(i - 1, j - 1) = -m(i - 1, j - 1);
    }
  return m;
}

template <class R>
Matrix<R> assemble_A(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp) {
  if (t.n != tp.n) throw DimensionError("assemble_A: cell sizes differ");
  return right_turn_matrix(tp) * left_turn_matrix(t);
}

template <class R>
Matrix<R> assemble_B(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp) {
  if (t.n != tp.n) throw DimensionError("assemble_B: cell sizes differ");
  return left_turn_matrix(tp) * right_turn_matrix(t);
}

template <class R>
Matrix<R> assemble_bruteforce(const TriangleNetwork<R>& t, const TriangleNetwork<R>& tp, bool for_A) {
  if (t.n != tp.n || t.kind != Kind::T || tp.kind != Kind::TPrime)
    throw DimensionError("assemble_bruteforce: expects (T, T') cells of equal size");
  const int n = t.n;
  auto dt = path_dag(t, Orientation::E), dp = path_dag(tp, Orientation::E);
  const int off = static_cast<int>(dt.out.size());
  PathDag<R> joint;
  joint.out = dt.out;
  for (const auto& arcs : dp.out) {
    joint.out.emplace_back();
    for (auto a : arcs) {
      a.to += off;
      joint.out.back().push_back(a);
    }
  }
  Side out_side = for_A ? Side::TopRight : Side::BottomRight;
  Side in_side = for_A ? Side::LowerLeft : Side::UpperLeft;
  for (int i = 1; i <= n; ++i) {
    int from = target_port(dt, out_side, i);
    int to = source_port(dp, in_side, i) + off;
    joint.out[from].push_back({to, t.like(), false});
  }
  std::vector<bool> is_target(joint.out.size(), false);
  std::vector<int> row(joint.out.size(), -1);
  for (int i = 1; i <= n; ++i) {
    int p = target_port(dp, Side::Right, i) + off;
    is_target[p] = true;
    row[p] = i - 1;
  }
  // Every arc weight counts: the T' entry stubs carry a neutral weight.
  PathFamily all{Orientation::E, Side::Left, Side::Right, true, true};
  Matrix<R> m(n, n, t.like().zero_like());
  for (int j = 1; j <= n; ++j) {
    int src = source_port(dt, Side::Left, j);
    enumerate_paths(joint, src, is_target, all, t.like(), [&](int port, const R& w) { m(row[port], j - 1) += w; });
  }
  return m;
}

// ---------------------------------------------------------------------------
// Reports

bool Report::passed() const {
  for (const auto& c : claims)
    if (!c.passed) return false;
  return true;
}

const ClaimResult* Report::find(const std::string& claim) const {
  for (const auto& c : claims)
    if (c.claim == claim) return &c;
  return nullptr;
}

namespace {

bool all_exact(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_exact()) return false;
  return true;
}

bool same(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return approx_equal(a, b, tol);
}

bool same(const ScalarMatrix& a, const ScalarMatrix& b, double tol) {
  if (all_exact(a) && all_exact(b)) return a == b;
  return approx_equal(a, b, tol);
}

bool lower(const ScalarMatrix& m, double tol) {
  return all_exact(m) ? is_lower_triangular(m) : is_lower_triangular(m, tol);
}

bool upper(const ScalarMatrix& m, double tol) {
  return all_exact(m) ? is_upper_triangular(m) : is_upper_triangular(m, tol);
}

std::string entry(const char* name, std::size_t i, std::size_t j, const Scalar& v) {
  return std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]=" + v.str();
}

}  // namespace

ClaimResult check_lemma2(const TriangleNetwork<Scalar>& t, double tol, SignConvention sign) {
  ClaimResult r{t.kind == Kind::T ? "lemma2_T" : "lemma2_Tp", true, ""};
  auto dc = d_matrix_combinatorial(t, sign);
  auto da = d_matrix_algebraic(t);
  bool pattern = t.kind == Kind::T ? is_lower_antitriangular(dc) : is_upper_antitriangular(dc);
  if (!pattern) {
    r.passed = false;
    r.detail = "antitriangular zero pattern violated";
    return r;
  }
  for (std::size_t i = 0; i < dc.rows(); ++i)
    for (std::size_t j = 0; j < dc.cols(); ++j)
      if (!same(dc(i, j), da(i, j), tol)) {
        r.passed = false;
        r.detail = entry("combinatorial", i, j, dc(i, j)) + " vs " + entry("algebraic", i, j, da(i, j));
        return r;
      }
  return r;
}

ClaimResult check_conjugation(const TriangleNetwork<Scalar>& t, const TriangleNetwork<Scalar>& tp, double tol) {
  ClaimResult r{"conj", true, ""};
  auto l = left_turn_matrix(t), rt = right_turn_matrix(t);
  auto lp = left_turn_matrix(tp), rp = right_turn_matrix(tp);
  auto d = d_matrix_algebraic(t), dp = d_matrix_algebraic(tp);
  auto a = rp * l, b = lp * rt;
  auto ainv = mat_inverse(a);
  auto lhs1 = ainv * b, lhs2 = b * ainv;
  struct Item {
    const char* name;
    ScalarMatrix lhs, rhs;
  };
  std::vector<Item> items = {
      {"A^-1 B = L^-1 (D'D) L", lhs1, mat_inverse(l) * (dp * d) * l},
      {"A^-1 B = R^-1 (DD') R", lhs1, mat_inverse(rt) * (d * dp) * rt},
      {"B A^-1 = R' (D'D) R'^-1", lhs2, rp * (dp * d) * mat_inverse(rp)},
      {"B A^-1 = L' (DD') L'^-1", lhs2, lp * (d * dp) * mat_inverse(lp)},
  };
  for (const auto& it : items)
    if (!same(it.lhs, it.rhs, tol)) {
      r.passed = false;
      r.detail = std::string("identity failed: ") + it.name;
      return r;
    }
  return r;
}

Report verify_theorem1(const TorusNetwork<Scalar>& net, double tol, SignConvention sign) {
  Report rep;
  const int n = net.n;
  const auto& t = net.t;
  const auto& tp = net.tp;
  auto a = assemble_A(t, tp), b = assemble_B(t, tp);
  auto dd = d_matrix_algebraic(t) * d_matrix_algebraic(tp);
  auto z = torus_zigzags(net);
  const Scalar eps = Scalar(n % 2 == 1 ? 1 : -1).as_mode(a(0, 0).mode());
  auto idx = [n](int v) { return ((v % n) + n) % n; };

  {
    ClaimResult c{"thm1a", lower(a, tol), ""};
    if (!c.passed) c.detail = "A is not lower triangular";
    Multiset diag{a.diagonal()}, zig{z.ne};
    for (int i = 0; c.passed && i < n; ++i)
      if (!same(a(i, i), z.ne[i], tol)) {
        c.passed = false;
        c.detail = entry("A", i, i, a(i, i)) + " but NE zig-zag of row " + std::to_string(i) + " has weight " + z.ne[i].str();
      }
    if (c.passed && !diag.equals(zig, tol)) {
      c.passed = false;
      c.detail = "multiset mismatch";
    }
    rep.claims.push_back(c);
  }
  {
    ClaimResult c{"thm1b", upper(b, tol), ""};
    if (!c.passed) c.detail = "B is not upper triangular";
    for (int j = 1; c.passed && j <= n; ++j) {
      const Scalar& w = z.se[idx(1 - j)];
      if (!same(b(j - 1, j - 1), w, tol)) {
        c.passed = false;
        c.detail = entry("B", j - 1, j - 1, b(j - 1, j - 1)) + " but SE zig-zag of column " + std::to_string(idx(1 - j)) +
                   " has weight " + w.str();
      }
    }
    if (c.passed && !Multiset{b.diagonal()}.equals(Multiset{z.se}, tol)) {
      c.passed = false;
      c.detail = "multiset mismatch";
    }
    rep.claims.push_back(c);
  }
  {
    ClaimResult c{"thm1c", lower(dd, tol), ""};
    if (!c.passed) c.detail = "DD' is not lower triangular";
    std::vector<Scalar> signed_s;
    for (const auto& s : z.s) signed_s.push_back(eps * s);
    for (int i = 1; c.passed && i <= n; ++i) {
      Scalar w = eps * z.s[idx(-i)];
      if (!same(dd(i - 1, i - 1), w, tol)) {
        c.passed = false;
        c.detail = entry("DD'", i - 1, i - 1, dd(i - 1, i - 1)) + " but (-1)^(n+1) S zig-zag on antidiagonal " +
                   std::to_string(idx(-i)) + " is " + w.str();
      }
    }
    if (c.passed && !Multiset{dd.diagonal()}.equals(Multiset{signed_s}, tol)) {
      c.passed = false;
      c.detail = "multiset mismatch";
    }
    rep.claims.push_back(c);
  }
  rep.claims.push_back(check_lemma2(t, tol, sign));
  rep.claims.push_back(check_lemma2(tp, tol, sign));
  rep.claims.push_back(check_conjugation(t, tp, tol));
  {
    ClaimResult c{"det", true, ""};
    Scalar lhs = determinant(b) / determinant(a), rhs = a(0, 0).one_like();
    for (const auto& v : dd.diagonal()) rhs *= v;
    if (!same(lhs, rhs, tol)) {
      c.passed = false;
      c.detail = "det(B)/det(A)=" + lhs.str() + " but prod diag(DD')=" + rhs.str();
    }
    rep.claims.push_back(c);
  }
  return rep;
}

std::string matrix_str(const Matrix<Laurent>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
    os << "]\n";
  }
  return os.str();
}

#define ISOPAIR_INSTANTIATE(R)                                                                           \
  template PathDag<R> path_dag<R>(const TriangleNetwork<R>&, Orientation);                               \
  template Matrix<R> path_matrix<R>(const TriangleNetwork<R>&, const PathFamily&);                      \
  template Matrix<R> path_matrix_bruteforce<R>(const TriangleNetwork<R>&, const PathFamily&);           \
  template Matrix<R> left_turn_matrix<R>(const TriangleNetwork<R>&);                                    \
  template Matrix<R> right_turn_matrix<R>(const TriangleNetwork<R>&);                                   \
  template Matrix<R> d_matrix_algebraic<R>(const TriangleNetwork<R>&);                                  \
  template Matrix<R> d_matrix_combinatorial<R>(const TriangleNetwork<R>&, SignConvention);              \
  template Matrix<R> assemble_A<R>(const TriangleNetwork<R>&, const TriangleNetwork<R>&);               \
  template Matrix<R> assemble_B<R>(const TriangleNetwork<R>&, const TriangleNetwork<R>&);               \
  template Matrix<R> assemble_bruteforce<R>(const TriangleNetwork<R>&, const TriangleNetwork<R>&, bool);

ISOPAIR_INSTANTIATE(Scalar)
ISOPAIR_INSTANTIATE(Laurent)

#undef ISOPAIR_INSTANTIATE

}  // namespace isopair
