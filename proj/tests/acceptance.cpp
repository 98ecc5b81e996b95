// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "examples.hpp"
#include "isopair/cli.hpp"
#include "isopair/facecoords.hpp"
#include "isopair/polygon.hpp"
#include "isopair/sampling.hpp"
#include "isopair/surfaces.hpp"
#include "isopair/transfer.hpp"

using namespace isopair;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> body;
};

std::string where(int n, int trial) { return "n=" + std::to_string(n) + " trial " + std::to_string(trial); }

void require_claims(Outcome& o, const Report& r, std::initializer_list<const char*> ids, const std::string& ctx) {
  for (const char* id : ids) {
    const ClaimResult* c = r.find(id);
    if (!c) o.fail(ctx + ": claim " + id + " missing");
    else if (!c->passed) o.fail(ctx + ": " + id + " " + c->detail);
  }
}

// Random tori shared by criteria 3 and 4.
std::vector<std::pair<int, TorusNetwork<Scalar>>> theorem1_trials() {
  std::vector<std::pair<int, TorusNetwork<Scalar>>> nets;
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 100; ++t) nets.emplace_back(n, Sampler(trial_seed(kSeed, 300 + n, t)).torus(n));
  return nets;
}

Outcome symbolic_examples() {
  Outcome o;
  auto m1 = testdata::compare_symbolic(left_turn_matrix(symbolic_triangle(Kind::T, 3)), testdata::kLeftTurnT3);
  auto m2 = testdata::compare_symbolic(right_turn_matrix(symbolic_triangle(Kind::TPrime, 4)), testdata::kRightTurnTp4);
  auto m3 = testdata::compare_symbolic(d_matrix_algebraic(symbolic_triangle(Kind::T, 3)), testdata::kDT3);
  if (!m1.empty()) o.fail("left turn T, n=3 " + m1);
  if (!m2.empty()) o.fail("right turn T', n=4 " + m2);
  if (!m3.empty()) o.fail("D for T, n=3 " + m3);
  return o;
}

Outcome lemma2_oracle() {
  Outcome o;
  int checked = 0;
  for (Kind kind : {Kind::T, Kind::TPrime})
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 50; ++t) {
        auto tri = Sampler(trial_seed(kSeed, 200 + 10 * static_cast<int>(kind) + n, t)).triangle(kind, n);
        auto c = check_lemma2(tri);
        ++checked;
        if (!c.passed) o.fail(std::string(kind == Kind::T ? "T " : "T' ") + where(n, t) + ": " + c.detail);
      }
  if (o.ok) o.detail = std::to_string(checked) + " cells";
  return o;
}

Outcome theorem1(const std::vector<std::pair<int, TorusNetwork<Scalar>>>& nets) {
  Outcome o;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const auto& [n, net] = nets[i];
    require_claims(o, verify_theorem1(net), {"thm1a", "thm1b", "thm1c"}, where(n, static_cast<int>(i % 100)));
  }
  if (o.ok) o.detail = std::to_string(nets.size()) + " tori";
  return o;
}

Outcome conjugation(const std::vector<std::pair<int, TorusNetwork<Scalar>>>& nets) {
  Outcome o;
  for (std::size_t i = 0; i < nets.size(); ++i) {
    const auto& [n, net] = nets[i];
    auto c = check_conjugation(net.t, net.tp);
    if (!c.passed) o.fail(where(n, static_cast<int>(i % 100)) + ": " + c.detail);
  }
  return o;
}

Outcome psi_correctness() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 100; ++t) {
      Sampler s(trial_seed(kSeed, 500 + n, t));
      auto e = s.eigendata(n);
      auto y = s.free_block(n);
      auto r = psi(e, y);
      require_claims(o, check_psi(r, e), {"psi_alpha", "psi_beta", "psi_gamma"}, where(n, t));
      if (n == 2) {
        auto [am, bm] = testdata::printed_pair_n2(e);
        if (!testdata::same_charpolys(r.a, r.b, am, bm)) o.fail(where(n, t) + ": not conjugate to the printed pair");
      }
    }
    // Free parameters: the Y block, and exactly its entries survive as variables in the symbolic solve.
    long expected = static_cast<long>(n - 1) * (n - 2);
    FreeBlock<Scalar> y{n, {}};
    std::set<std::string> vars;
    for (const auto& p : laurent_exponents(n).grid)
      for (const auto& [mono, coeff] : p.terms())
        for (const auto& [v, e] : mono)
          if (v.rfind("Y_", 0) == 0) vars.insert(v);
    if (static_cast<long>(y.rows() * y.cols()) != expected || static_cast<long>(vars.size()) != expected)
      o.fail("n=" + std::to_string(n) + ": free count " + std::to_string(vars.size()) + ", expected " +
             std::to_string(expected));
  }
  EigenData<Scalar> ex{2, {Scalar(2), Scalar(3)}, {Scalar(5), Scalar(7)}, {Scalar(1), Scalar::rational(35, 6)}};
  auto r = psi(ex, FreeBlock<Scalar>{2, {}});
  auto [am, bm] = testdata::printed_pair_n2(ex);
  if (!testdata::same_charpolys(r.a, r.b, am, bm)) o.fail("worked n=2 example differs from the printed pair");
  return o;
}

Outcome face_roundtrip() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      Sampler s(trial_seed(kSeed, 600 + n, t));
      auto e = s.eigendata(n);
      auto fc = solve_face_weights(e, s.free_block(n));
      auto net = connection_from_face_weights(fc);
      auto conn = net.connection();
      for (int x = 0; x < n; ++x)
        for (int yy = 0; yy < n; ++yy)
          if (monodromy(net.graph, conn, net.face(x, yy)) != fc.at(x, yy))
            o.fail(where(n, t) + ": face (" + std::to_string(x) + "," + std::to_string(yy) + ")");
      if (monodromy(net.graph, conn, net.gamma_x()) != fc.x_x) o.fail(where(n, t) + ": X_x");
      if (monodromy(net.graph, conn, net.gamma_y()) != fc.x_y) o.fail(where(n, t) + ": X_y");
    }
  return o;
}

Outcome positivity() {
  Outcome o;
  for (int n : {3, 5, 2, 4})
    for (int t = 0; t < 20; ++t) {
      Sampler s(trial_seed(kSeed, 700 + n, t));
      auto e = s.positive_eigendata(n);  // gamma negative for even n
      auto y = s.free_block(n, true);
      try {
        require_claims(o, check_positivity(e, y), {"positive_faces", "real_pair"}, where(n, t));
      } catch (const Error& ex) {
        o.fail(where(n, t) + ": " + ex.what());
      }
    }
  return o;
}

Outcome general_surfaces() {
  Outcome o;
  const std::pair<int, int> cases[] = {{0, 3}, {1, 1}, {1, 2}, {2, 3}, {3, 5}};
  for (auto [g, k] : cases)
    for (int n = 1; n <= 3; ++n) {
      std::string ctx = "(g,k,n)=(" + std::to_string(g) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
      auto rep = analyze_surface(g, k, n);
      require_claims(o, rep, {"triangles", "euler", "rank", "free_count"}, ctx);
      if (g == 0 && k == 3 && dimension(g, k, n) != static_cast<long>(n - 1) * (n - 2))
        o.fail(ctx + ": dimension differs from (n-1)(n-2)");
    }
  return o;
}

Outcome scott_polygons() {
  Outcome o;
  int count = 0;
  for (int g = 0; g <= 10; ++g) {
    auto r = scott_range(g);
    for (int k = r.k_min; k <= (r.k_max ? *r.k_max : 40); ++k) {
      auto pc = polygon_construction(g, k);
      ++count;
      std::string ctx = "(g,k)=(" + std::to_string(g) + "," + std::to_string(k) + ")";
      if (!(lattice_census(pc.polygon) == Census{g, k})) o.fail(ctx + ": census mismatch");
      for (const auto& c : pc.cuts)
        if (c.after.interior != c.before.interior) o.fail(ctx + ": cut " + std::to_string(c.i) + " moved interior points");
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " polygons";
  return o;
}

Outcome determinism() {
  Outcome o;
  const char* argv[] = {"isopair", "verify", "--seed", "42"};
  std::ostringstream out1, out2, err;
  int c1 = cli::run(4, argv, out1, err);
  int c2 = cli::run(4, argv, out2, err);
  if (c1 != 0 || c2 != 0) o.fail("verify exited with " + std::to_string(c1) + "/" + std::to_string(c2));
  if (out1.str().empty() || out1.str() != out2.str()) o.fail("reports differ");
  if (o.ok) o.detail = std::to_string(out1.str().size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, TorusNetwork<Scalar>>> nets;
  std::vector<Criterion> criteria = {
      {1, "symbolic turn and D matrices", 1, symbolic_examples},
      {2, "D oracle, n=1..5, 50 trials per kind", 30, lemma2_oracle},
      {3, "zig-zag eigenvalues, n=2..5, 100 trials",
       60, [&] {
         nets = theorem1_trials();
         return theorem1(nets);
       }},
      {4, "conjugation identities on the same trials", 0, [&] { return conjugation(nets); }},
      {5, "parameterized pair, n=2..5, 100 trials", 0, psi_correctness},
      {6, "face-coordinate round trip, n<=5", 0, face_roundtrip},
      {7, "positivity, 20 trials per n", 0, positivity},
      {8, "general (g,k), n=1..3", 120, general_surfaces},
      {9, "polygons for g<=10", 10, scott_polygons},
      {10, "verify --seed 42 is byte-identical", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.fail("took " + std::to_string(secs) + " s");
    failures += !o.ok;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
