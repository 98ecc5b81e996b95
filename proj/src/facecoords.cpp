#include "isopair/facecoords.hpp"

#include <numeric>
#include <sstream>

namespace isopair {

namespace {

int mod(int v, int n) { return ((v % n) + n) % n; }

bool eq(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return approx_equal(a, b, tol);
}
bool eq(const Laurent& a, const Laurent& b, double) { return a == b; }

template <class R>
R sign_eps(int n, const R& one) {
  return n % 2 == 1 ? one : -one;
}

using Cells = std::vector<std::pair<int, int>>;

Cells row_cells(int n, int x) {
  Cells c;
  for (int y = 0; y < n; ++y) c.emplace_back(x, y);
  return c;
}

Cells col_cells(int n, int y) {
  Cells c;
  for (int x = 0; x < n; ++x) c.emplace_back(x, y);
  return c;
}

Cells anti_cells(int n, int s) {
  Cells c;
  for (int x = 0; x < n; ++x) c.emplace_back(x, mod(s - x, n));
  return c;
}

Cells midline_cells(int n) {
  Cells c;
  for (int x = 0; x < n; ++x)
    for (int y = 0; x + y <= n - 2; ++y) c.emplace_back(x, y);
  return c;
}

template <class R>
R row_target(const EigenData<R>& e, int x) {
  return e.alpha[mod(x + 1, e.n)] / e.alpha[mod(x, e.n)];
}

template <class R>
R col_target(const EigenData<R>& e, int y) {
  return e.beta[mod(-y, e.n)] / e.beta[mod(-y - 1, e.n)];
}

template <class R>
R anti_target(const EigenData<R>& e, int s) {
  return e.gamma[mod(-s - 1, e.n)] / e.gamma[mod(-s - 2, e.n)];
}

template <class R>
R midline_target(const EigenData<R>& e) {
  return e.beta[0] / (sign_eps(e.n, e.alpha[0].one_like()) * e.gamma[0] * e.alpha[0]);
}

template <class R>
R product(const FaceCoordinates<R>& fc, const Cells& cells) {
  R p = fc.x_x.one_like();
  for (auto [x, y] : cells) p *= fc.at(x, y);
  return p;
}

// Sets the one undetermined cell of `cells` so that their product is `target`.
template <class R>
void solve_for(FaceCoordinates<R>& fc, std::vector<bool>& known, const Cells& cells, int ux, int uy, const R& target,
               const char* what) {
  R rest = fc.x_x.one_like();
  for (auto [x, y] : cells) {
    if (x == ux && y == uy) continue;
    if (!known[x * fc.n + y]) throw InternalError(std::string("solve_face_weights: ") + what + " has two unknowns");
    rest *= fc.at(x, y);
  }
  if (known[ux * fc.n + uy]) throw InternalError("solve_face_weights: cell solved twice");
  fc.at(ux, uy) = target / rest;
  known[ux * fc.n + uy] = true;
}

}  // namespace

template <class R>
R consistency_residual(const EigenData<R>& e) {
  R r = e.alpha.at(0).one_like();
  for (int i = 0; i < e.n; ++i) r *= e.alpha[i] * e.gamma[i] / e.beta[i];
  return r;
}

void require_consistent(const EigenData<Scalar>& e, double tol) {
  const auto n = static_cast<std::size_t>(e.n);
  if (e.n < 1) throw PreconditionError("eigen data: n must be positive");
  if (e.alpha.size() != n || e.beta.size() != n || e.gamma.size() != n)
    throw PreconditionError("eigen data: alpha, beta and gamma need n entries each");
  for (const auto* v : {&e.alpha, &e.beta, &e.gamma})
    for (const auto& s : *v)
      if (s.is_zero()) throw PreconditionError("eigen data: eigenvalues must be nonzero");
  Scalar r = consistency_residual(e);
  if (!eq(r, r.one_like(), tol))
    throw PreconditionError("eigen data: prod alpha_i gamma_i / beta_i = " + r.str() + ", expected 1");
}

template <class R>
std::vector<std::string> face_constraint_violations(const FaceCoordinates<R>& fc, const EigenData<R>& e, double tol) {
  std::vector<std::string> out;
  const int n = fc.n;
  auto check = [&](const Cells& cells, const R& target, const std::string& what) {
    R p = product(fc, cells);
    if (!eq(p, target, tol)) out.push_back(what + ": product " + p.str() + ", expected " + target.str());
  };
  for (int x = 0; x < n; ++x) check(row_cells(n, x), row_target(e, x), "row " + std::to_string(x));
  for (int y = 0; y < n; ++y) check(col_cells(n, y), col_target(e, y), "column " + std::to_string(y));
  for (int s = 0; s < n; ++s) check(anti_cells(n, s), anti_target(e, s), "antidiagonal " + std::to_string(s));
  check(midline_cells(n), midline_target(e), "midline");
  Cells all;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) all.emplace_back(x, y);
  check(all, fc.x_x.one_like(), "total product");
  if (!eq(fc.x_x, e.alpha[0], tol)) out.push_back("X_x differs from alpha_1");
  if (!eq(fc.x_y, e.beta[0], tol)) out.push_back("X_y differs from beta_1");
  return out;
}

template <class R>
FaceCoordinates<R> solve_face_weights(const EigenData<R>& e, const FreeBlock<R>& y, double tol) {
  const int n = e.n;
  if (n < 1) throw PreconditionError("solve_face_weights: n must be positive");
  if (y.n != n || y.y.size() != y.rows() * y.cols())
    throw PreconditionError("solve_face_weights: free block must be (n-2) x (n-1)");
  for (const auto& v : y.y)
    if (v.is_zero()) throw PreconditionError("solve_face_weights: free block entries must be nonzero");
  R residual = consistency_residual(e);
  if (!eq(residual, residual.one_like(), tol))
    throw PreconditionError("solve_face_weights: inconsistent eigen data, residual " + residual.str());

  const R one = e.alpha[0].one_like();
  FaceCoordinates<R> fc{n, std::vector<R>(n * n, one), e.alpha[0], e.beta[0]};
  if (n == 1) return fc;

  std::vector<bool> known(n * n, false);
  for (int x = 0; x + 2 < n; ++x)
    for (int c = 0; c + 1 < n; ++c) {
      fc.at(x, c) = y.at(x, c);
      known[x * n + c] = true;
    }
  for (int x = 0; x + 2 < n; ++x) solve_for(fc, known, row_cells(n, x), x, n - 1, row_target(e, x), "row");
  solve_for(fc, known, midline_cells(n), n - 2, 0, midline_target(e), "midline");
  for (int k = 1; k <= n - 1; ++k) {
    solve_for(fc, known, col_cells(n, k - 1), n - 1, k - 1, col_target(e, k - 1), "column");
    if (k <= n - 2) solve_for(fc, known, anti_cells(n, mod(k - 2, n)), n - 2, k, anti_target(e, mod(k - 2, n)), "antidiagonal");
  }
  solve_for(fc, known, row_cells(n, n - 2), n - 2, n - 1, row_target(e, n - 2), "row");
  solve_for(fc, known, row_cells(n, n - 1), n - 1, n - 1, row_target(e, n - 1), "row");

  auto bad = face_constraint_violations(fc, e, tol);
  if (!bad.empty()) throw InternalError("solve_face_weights: redundant relation fails: " + bad.front());
  return fc;
}

TorusNetwork<Scalar> connection_from_face_weights(const FaceCoordinates<Scalar>& fc, double tol) {
  const int n = fc.n;
  if (n < 1 || fc.grid.size() != static_cast<std::size_t>(n * n))
    throw PreconditionError("connection_from_face_weights: grid must be n x n");
  const Scalar one = fc.x_x.one_like();
  // Unit weights fix the combinatorics; the weights themselves are solved below.
  auto net = torus_from_weights(n, std::vector<Scalar>(n * n, one), std::vector<Scalar>(n * n, one));
  const auto& g = net.graph;

  // Spanning tree through all horizontal edges; the remaining n^2+1 edges carry the weights.
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> cotree;
  for (int pass = 0; pass < 2; ++pass)
    for (int e = 0; e < g.num_edges(); ++e) {
      bool horizontal = e % 3 == static_cast<int>(EdgeType::Horizontal);
      if (horizontal != (pass == 0)) continue;
      int u = find(g.vertex_of(g.edge_black_half(e))), v = find(g.vertex_of(g.edge_white_half(e)));
      if (u != v) {
        parent[u] = v;
      } else {
        cotree.push_back(e);
      }
    }
  std::vector<int> column(g.num_edges(), -1);
  for (std::size_t k = 0; k < cotree.size(); ++k) column[cotree[k]] = static_cast<int>(k);

  std::vector<HalfEdgeCycle> basis;
  std::vector<Scalar> target;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == n - 1 && y == n - 1) continue;
      basis.push_back(net.face(x, y));
      target.push_back(fc.at(x, y));
    }
  basis.push_back(net.gamma_x());
  target.push_back(fc.x_x);
  basis.push_back(net.gamma_y());
  target.push_back(fc.x_y);
  if (basis.size() != cotree.size()) throw InternalError("connection_from_face_weights: basis size mismatch");

  IntMatrix m(basis.size(), std::vector<long>(cotree.size(), 0));
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (int h : basis[r]) {
      int c = column[g.edge_of(h)];
      if (c >= 0) m[r][c] += g.from_black(h) ? 1 : -1;
    }
  IntMatrix inv = unimodular_inverse(m);

  std::vector<Scalar> w(g.num_edges(), one);
  for (std::size_t k = 0; k < cotree.size(); ++k) {
    Scalar v = one;
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (inv[k][r] != 0) v *= target[r].pow(inv[k][r]);
    w[cotree[k]] = v;
  }
  std::vector<Scalar> a(n * n), b(n * n);
  for (int v = 0; v < n * n; ++v) {
    b[v] = w[3 * v + static_cast<int>(EdgeType::SE)];
    a[v] = w[3 * v + static_cast<int>(EdgeType::NE)];
  }
  auto out = torus_from_weights(n, std::move(a), std::move(b));

  auto conn = out.connection();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!eq(monodromy(out.graph, conn, out.face(x, y)), fc.at(x, y), tol))
        throw InternalError("connection_from_face_weights: face (" + std::to_string(x) + "," + std::to_string(y) +
                            ") not reproduced");
  if (!eq(monodromy(out.graph, conn, out.gamma_x()), fc.x_x, tol) ||
      !eq(monodromy(out.graph, conn, out.gamma_y()), fc.x_y, tol))
    throw InternalError("connection_from_face_weights: homology monodromy not reproduced");
  return out;
}

PsiResult psi(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y, double tol) {
  require_consistent(e, tol);
  PsiResult r;
  r.faces = solve_face_weights(e, y, tol);
  r.network = connection_from_face_weights(r.faces, tol);
  r.a = assemble_A(r.network.t, r.network.tp);
  r.b = assemble_B(r.network.t, r.network.tp);
  return r;
}

Report check_psi(const PsiResult& r, const EigenData<Scalar>& e, double tol) {
  Report rep = verify_theorem1(r.network, tol);
  const int n = e.n;
  auto dd = d_matrix_algebraic(r.network.t) * d_matrix_algebraic(r.network.tp);
  auto diag_claim = [&](const char* id, const ScalarMatrix& m, const std::vector<Scalar>& want, const char* name) {
    ClaimResult c{id, true, ""};
    for (int i = 0; i < n && c.passed; ++i)
      if (!eq(m(i, i), want[i], tol)) {
        c.passed = false;
        c.detail = std::string(name) + "_" + std::to_string(i + 1) + " = " + want[i].str() + " but diagonal entry is " +
                   m(i, i).str();
      }
    rep.claims.push_back(c);
  };
  diag_claim("psi_alpha", r.a, e.alpha, "alpha");
  diag_claim("psi_beta", r.b, e.beta, "beta");
  diag_claim("psi_gamma", dd, e.gamma, "gamma");
  return rep;
}

EigenData<Laurent> symbolic_eigendata(int n) {
  if (n < 1) throw PreconditionError("symbolic_eigendata: n must be positive");
  EigenData<Laurent> e{n, {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    e.alpha.push_back(Laurent::variable("alpha_{" + std::to_string(i) + "}"));
    e.beta.push_back(Laurent::variable("beta_{" + std::to_string(i) + "}"));
  }
  Laurent last(1);
  for (int i = 0; i < n; ++i) last *= e.beta[i] / e.alpha[i];
  for (int i = 1; i < n; ++i) {
    e.gamma.push_back(Laurent::variable("gamma_{" + std::to_string(i) + "}"));
    last /= e.gamma.back();
  }
  e.gamma.push_back(last);
  return e;
}

FreeBlock<Laurent> symbolic_free_block(int n) {
  FreeBlock<Laurent> y{n, {}};
  for (std::size_t x = 0; x < y.rows(); ++x)
    for (std::size_t c = 0; c < y.cols(); ++c)
      y.y.push_back(Laurent::variable("Y_{" + std::to_string(x) + "," + std::to_string(c) + "}"));
  return y;
}

FaceCoordinates<Laurent> laurent_exponents(int n) {
  auto fc = solve_face_weights(symbolic_eigendata(n), symbolic_free_block(n));
  for (const auto& p : fc.grid)
    if (!p.is_unit()) throw InternalError("laurent_exponents: non-monomial face weight " + p.str());
  return fc;
}

std::map<std::string, Scalar> laurent_assignment(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y) {
  std::map<std::string, Scalar> v;
  for (int i = 1; i <= e.n; ++i) {
    v["alpha_{" + std::to_string(i) + "}"] = e.alpha[i - 1];
    v["beta_{" + std::to_string(i) + "}"] = e.beta[i - 1];
    v["gamma_{" + std::to_string(i) + "}"] = e.gamma[i - 1];
  }
  for (std::size_t x = 0; x < y.rows(); ++x)
    for (std::size_t c = 0; c < y.cols(); ++c)
      v["Y_{" + std::to_string(x) + "," + std::to_string(c) + "}"] = y.at(x, c);
  return v;
}

Scalar laurent_evaluate(const Laurent& p, const std::map<std::string, Scalar>& values) {
  Mode mode = Mode::Exact;
  for (const auto& [name, s] : values)
    if (!s.is_exact()) mode = Mode::Float;
  Scalar sum = Scalar(0).as_mode(mode);
  for (const auto& [mono, coeff] : p.terms()) {
    Scalar t = Scalar(static_cast<long>(coeff)).as_mode(mode);
    for (const auto& [name, exp] : mono) {
      auto it = values.find(name);
      if (it == values.end()) throw PreconditionError("laurent_evaluate: no value for " + name);
      t *= it->second.pow(exp);
    }
    sum += t;
  }
  return sum;
}

Report check_positivity(const EigenData<Scalar>& e, const FreeBlock<Scalar>& y) {
  require_consistent(e);
  const bool odd = e.n % 2 == 1;
  auto all = [](const std::vector<Scalar>& v, bool positive) {
    for (const auto& s : v)
      if (positive ? !s.is_positive_real() : !s.is_negative_real()) return false;
    return true;
  };
  if (!all(e.alpha, true) || !all(e.beta, true) || !all(y.y, true) || !all(e.gamma, odd))
    throw PreconditionError(odd ? "positivity: n odd needs alpha, beta, gamma and Y positive"
                                : "positivity: n even needs alpha, beta, Y positive and gamma negative");
  auto r = psi(e, y);
  Report rep = check_psi(r, e);
  ClaimResult faces{"positive_faces", true, ""};
  for (int x = 0; x < e.n && faces.passed; ++x)
    for (int c = 0; c < e.n && faces.passed; ++c)
      if (!r.faces.at(x, c).is_positive_real()) {
        faces.passed = false;
        faces.detail = "X(" + std::to_string(x) + "," + std::to_string(c) + ") = " + r.faces.at(x, c).str();
      }
  rep.claims.push_back(faces);
  ClaimResult real{"real_pair", true, ""};
  for (const auto* m : {&r.a, &r.b})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (!(*m)(i, j).is_real()) {
          real.passed = false;
          real.detail = "non-real matrix entry " + (*m)(i, j).str();
        }
  rep.claims.push_back(real);
  return rep;
}

long dimension(int g, int k, int n) {
  if (g < 0 || k < 1 || n < 1 || 2 - 2 * g - k >= 0)
    throw PreconditionError("dimension: need g >= 0, k >= 1, n >= 1 and 2-2g-k < 0");
  long nn = static_cast<long>(n) * n;
  return nn * (2L * g - 2 + k) - static_cast<long>(k) * n + 2;
}

template Scalar consistency_residual<Scalar>(const EigenData<Scalar>&);
template Laurent consistency_residual<Laurent>(const EigenData<Laurent>&);
template std::vector<std::string> face_constraint_violations<Scalar>(const FaceCoordinates<Scalar>&,
                                                                     const EigenData<Scalar>&, double);
template std::vector<std::string> face_constraint_violations<Laurent>(const FaceCoordinates<Laurent>&,
                                                                      const EigenData<Laurent>&, double);
template FaceCoordinates<Scalar> solve_face_weights<Scalar>(const EigenData<Scalar>&, const FreeBlock<Scalar>&, double);
template FaceCoordinates<Laurent> solve_face_weights<Laurent>(const EigenData<Laurent>&, const FreeBlock<Laurent>&,
                                                              double);

}  // namespace isopair
