#include "isopair/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "isopair/facecoords.hpp"
#include "isopair/io.hpp"
#include "isopair/polygon.hpp"
#include "isopair/sampling.hpp"
#include "isopair/surfaces.hpp"
#include "isopair/verify.hpp"

namespace isopair::cli {

using nlohmann::json;

namespace {

struct Options {
  int n = 4, n_min = 1, g = 0, k = 3;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  int trials = 50;
  double tol = 1e-8;
  unsigned threads = 0;
  std::string out, format = "json", dim_format = "text", graph = "Gn";
  std::string eigen_file, free_file;
  std::vector<std::string> suites;
  bool corrupt_sign = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const char* env = std::getenv("ISOPAIR_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t pos = 0;
    auto v = std::stoull(env, &pos, 10);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("ISOPAIR_SEED is not an unsigned integer: ") + env);
  }
}

Mode mode_of(const Options& o) { return mode_from_string(o.mode); }

json diagonal_json(const std::vector<Scalar>& d) {
  json j = json::array();
  for (const auto& s : d) j.push_back(s.str());
  return j;
}

int cmd_pair(const Options& o, std::string& text) {
  const Mode mode = mode_of(o);
  auto e = eigendata_from_json(read_file(o.eigen_file), mode);
  FreeBlock<Scalar> y{e.n, {}};
  if (!o.free_file.empty()) {
    y = free_block_from_json(read_file(o.free_file), mode);
  } else if (e.n >= 2) {
    y.y.assign(static_cast<std::size_t>(e.n - 2) * (e.n - 1), Scalar(1).as_mode(mode));
  }
  if (y.n != e.n) throw PreconditionError("free block size does not match the eigen data");
  require_consistent(e, o.tol);
  auto r = psi(e, y, o.tol);
  auto rep = check_psi(r, e, o.tol);
  auto dd = d_matrix_algebraic(r.network.t) * d_matrix_algebraic(r.network.tp);
  json j;
  j["A"] = matrix_to_json(r.a);
  j["B"] = matrix_to_json(r.b);
  j["face_grid"] = face_grid_to_json(r.faces);
  j["spectra"] = {{"A", diagonal_json(r.a.diagonal())},
                  {"B", diagonal_json(r.b.diagonal())},
                  {"BA^-1", diagonal_json(dd.diagonal())}};
  j["zigzag_report"] = report_to_json(rep);
  j["passed"] = rep.passed();
  text = j.dump(2);
  return rep.passed() ? kOk : kFailure;
}

int cmd_verify(const Options& o, std::string& text) {
  VerifyConfig cfg;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n;
  cfg.trials = o.trials;
  cfg.seed = resolve_seed(o);
  cfg.mode = mode_of(o);
  cfg.tol = o.tol;
  cfg.threads = o.threads;
  if (o.corrupt_sign) cfg.sign = SignConvention::Corrupted;
  if (!o.suites.empty()) cfg.suites = o.suites;
  auto result = run_verify(cfg);
  text = result.to_json().dump(2);
  return result.passed() ? kOk : kFailure;
}

int cmd_dim(const Options& o, std::string& text) {
  long d = dimension(o.g, o.k, o.n);
  text = o.dim_format == "json" ? json{{"g", o.g}, {"k", o.k}, {"n", o.n}, {"dimension", d}}.dump(2) : std::to_string(d);
  return kOk;
}

int cmd_rank(const Options& o, std::string& text) {
  auto rep = analyze_surface(o.g, o.k, o.n);
  auto tri = build_triangulation(o.g, o.k);
  RibbonGraph coarse = dual_graph(tri).conjugate();
  auto em = eigenvalue_exponent_matrix(build_surface_Gn(coarse, o.n), coarse);
  auto ind = verify_independence(em);
  json j{{"g", o.g},
         {"k", o.k},
         {"n", o.n},
         {"zigzags", em.rows.size()},
         {"rank", ind.rank},
         {"expected_rank", static_cast<long>(o.k) * o.n - 1},
         {"cycle_dim", ind.cycle_dim},
         {"free_count", ind.free_count},
         {"dimension", dimension(o.g, o.k, o.n)},
         {"claims", report_to_json(rep)},
         {"passed", rep.passed()}};
  text = j.dump(2);
  return rep.passed() ? kOk : kFailure;
}

int cmd_polygon(const Options& o, std::string& text) {
  auto c = polygon_construction(o.g, o.k);
  json j = json::parse(polygon_to_json(c.polygon));
  j["cuts"] = json::array();
  for (const auto& s : c.cuts)
    j["cuts"].push_back({{"i", s.i},
                         {"before", {{"interior", s.before.interior}, {"boundary", s.before.boundary}}},
                         {"after", {{"interior", s.after.interior}, {"boundary", s.after.boundary}}}});
  text = j.dump(2);
  return kOk;
}

int cmd_triangulate(const Options& o, std::string& text) {
  auto tri = build_triangulation(o.g, o.k);
  if (auto problem = validate_triangulation(tri); !problem.empty()) throw InternalError(problem);
  if (o.format == "dot") {
    text = ribbon_to_dot(dual_graph(tri));
    return kOk;
  }
  json j = json::parse(triangulation_to_json(tri));
  auto inv = conjugate_surface_invariants(tri);
  j["conjugate"] = {{"g", inv.g_prime}, {"k", inv.k_prime}, {"euler", inv.euler}};
  text = j.dump(2);
  return kOk;
}

int cmd_export(const Options& o, std::string& text) {
  const bool dot = o.format == "dot";
  if (o.graph == "torus") {
    Sampler s(resolve_seed(o));
    auto net = s.torus(o.n);
    text = dot ? torus_to_dot(net, true) : json::parse(torus_to_json(net)).dump(2);
    return kOk;
  }
  auto tri = build_triangulation(o.g, o.k);
  RibbonGraph graph = dual_graph(tri);
  if (o.graph != "Gsigma") graph = graph.conjugate();
  if (o.graph == "Gn") graph = build_surface_Gn(graph, o.n).graph;
  text = dot ? ribbon_to_dot(graph, zigzag_cycles(graph)) : json::parse(ribbon_to_json(graph)).dump(2);
  return kOk;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  std::string body = text.empty() || text.back() == '\n' ? text : text + "\n";
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw PreconditionError("cannot write '" + o.out + "'");
  f << body;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix pairs with prescribed spectra from honeycomb networks", "isopair"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> modes = {"exact", "float"};
  const std::vector<std::string> formats = {"json", "dot"};

  auto common = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember(modes));
    c->add_option("--tol", o.tol, "comparison tolerance in float mode");
    c->add_option("--out", o.out, "write the result to this file");
  };
  auto surface = [&](CLI::App* c) {
    c->add_option("--g", o.g, "genus");
    c->add_option("--k", o.k, "number of punctures");
  };

  auto* pair = app.add_subcommand("pair", "build (A, B) from eigen data and a free block");
  pair->add_option("--eigen", o.eigen_file, "eigen data JSON")->required();
  pair->add_option("--free", o.free_file, "free block JSON (default: all ones)");
  common(pair);

  auto* verify = app.add_subcommand("verify", "run the seeded property suites");
  verify->add_option("--n", o.n, "largest n");
  verify->add_option("--n-min", o.n_min, "smallest n");
  verify->add_option("--seed", o.seed, "random seed (default: ISOPAIR_SEED or 0)");
  verify->add_option("--trials", o.trials, "trials per suite and n");
  verify->add_option("--threads", o.threads, "worker threads (0: all cores)");
  verify->add_option("--suite", o.suites, "restrict to these suites")->check(CLI::IsMember(known_suites()));
  verify->add_flag("--corrupt-sign", o.corrupt_sign)->group("");
  common(verify);

  auto* dim = app.add_subcommand("dim", "parameter count for (g, k, n)");
  surface(dim);
  dim->add_option("--n", o.n, "matrix size");
  dim->add_option("--format", o.dim_format, "json for an object")->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));
  dim->add_option("--out", o.out, "write the result to this file");

  auto* rank = app.add_subcommand("rank", "rank of the zig-zag exponent matrix");
  surface(rank);
  rank->add_option("--n", o.n, "matrix size");
  rank->add_option("--out", o.out, "write the result to this file");

  auto* polygon = app.add_subcommand("polygon", "lattice polygon with g interior and k boundary points");
  polygon->add_option("--g", o.g, "interior points")->required();
  polygon->add_option("--k", o.k, "boundary points")->required();
  polygon->add_option("--out", o.out, "write the result to this file");

  auto* triangulate = app.add_subcommand("triangulate", "mirror-symmetric triangulation of the surface");
  surface(triangulate);
  triangulate->add_option("--format", o.format, "json or dot")->check(CLI::IsMember(formats));
  triangulate->add_option("--out", o.out, "write the result to this file");

  auto* exp = app.add_subcommand("export", "export a graph as JSON or DOT");
  exp->add_option("--graph", o.graph, "Gsigma, G, Gn or torus")
      ->check(CLI::IsMember(std::vector<std::string>{"Gsigma", "G", "Gn", "torus"}));
  surface(exp);
  exp->add_option("--n", o.n, "honeycomb size");
  exp->add_option("--seed", o.seed, "seed for torus weights (default: ISOPAIR_SEED or 0)");
  exp->add_option("--format", o.format, "json or dot")->check(CLI::IsMember(formats));
  exp->add_option("--out", o.out, "write the result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  try {
    std::string text;
    int code = kOk;
    if (pair->parsed()) code = cmd_pair(o, text);
    else if (verify->parsed()) code = cmd_verify(o, text);
    else if (dim->parsed()) code = cmd_dim(o, text);
    else if (rank->parsed()) code = cmd_rank(o, text);
    else if (polygon->parsed()) code = cmd_polygon(o, text);
    else if (triangulate->parsed()) code = cmd_triangulate(o, text);
    else code = cmd_export(o, text);
    emit(o, text, out);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DimensionError& e) {
    err << "dimension: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DivisionByZero& e) {
    err << "division by zero: " << e.what() << "\n";
    return kPrecondition;
  } catch (const SingularMatrix& e) {
    err << "singular: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace isopair::cli
