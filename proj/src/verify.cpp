#include "isopair/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "isopair/facecoords.hpp"
#include "isopair/io.hpp"
#include "isopair/sampling.hpp"

namespace isopair {

using nlohmann::json;

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s = {"lemma2", "theorem1", "psi", "roundtrip"};
  return s;
}

bool VerifyResult::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

json VerifyResult::to_json() const {
  json j;
  j["config"] = {{"n_min", config.n_min},
                 {"n_max", config.n_max},
                 {"trials", config.trials},
                 {"seed", config.seed},
                 {"mode", to_string(config.mode)},
                 {"sign", config.sign == SignConvention::Standard ? "standard" : "corrupted"},
                 {"suites", config.suites}};
  if (config.mode == Mode::Float) j["config"]["tol"] = config.tol;
  j["suites"] = json::array();
  for (const auto& s : suites) {
    json e{{"suite", s.suite}, {"n", s.n}, {"trials", s.trials}, {"passed", s.passed}};
    e["claims"] = json::object();
    for (const auto& [claim, c] : s.counts) e["claims"][claim] = {{"passed", c.first}, {"failed", c.second}};
    if (!s.witness.is_null()) e["witness"] = s.witness;
    j["suites"].push_back(e);
  }
  j["passed"] = passed();
  return j;
}

namespace {

struct Trial {
  std::size_t suite;  // index into the result list
  std::string name;
  int n;
  int index;
  std::uint64_t seed;
};

struct Outcome {
  Report report;
  json input;
};

std::vector<Scalar> in_mode(const std::vector<Scalar>& v, Mode m) {
  std::vector<Scalar> out;
  for (const auto& s : v) out.push_back(s.as_mode(m));
  return out;
}

TriangleNetwork<Scalar> in_mode(const TriangleNetwork<Scalar>& t, Mode m) {
  auto r = t;
  for (auto& [l, v] : r.a) v = v.as_mode(m);
  for (auto& [l, v] : r.b) v = v.as_mode(m);
  return r;
}

json triangle_json(const TriangleNetwork<Scalar>& t) {
  json j{{"kind", t.kind == Kind::T ? "T" : "T'"}, {"n", t.n}};
  for (auto [key, w] : {std::pair{"a", &t.a}, std::pair{"b", &t.b}}) {
    j[key] = json::object();
    for (const auto& [l, v] : *w) j[key][std::to_string(l.first) + "," + std::to_string(l.second)] = v.str();
  }
  return j;
}

EigenData<Scalar> in_mode(const EigenData<Scalar>& e, Mode m) {
  return {e.n, in_mode(e.alpha, m), in_mode(e.beta, m), in_mode(e.gamma, m)};
}

FreeBlock<Scalar> in_mode(const FreeBlock<Scalar>& y, Mode m) { return {y.n, in_mode(y.y, m)}; }

bool close(const Scalar& x, const Scalar& y, double tol) {
  if (x.is_exact() && y.is_exact()) return x == y;
  return (x - y).abs() <= tol * std::max(1.0, y.abs());
}

Report lemma2_trial(const Trial& t, const VerifyConfig& cfg, json& input) {
  Sampler s(t.seed);
  Report rep;
  input = json::array();
  const std::pair<Kind, const char*> kinds[] = {{Kind::T, "lemma2_T"}, {Kind::TPrime, "lemma2_Tp"}};
  for (auto [kind, id] : kinds) {
    auto tri = in_mode(s.triangle(kind, t.n), cfg.mode);
    input.push_back(triangle_json(tri));
    auto c = check_lemma2(tri, cfg.tol, cfg.sign);
    c.claim = id;
    rep.claims.push_back(c);
  }
  return rep;
}

Report theorem1_trial(const Trial& t, const VerifyConfig& cfg, json& input) {
  Sampler s(t.seed);
  auto raw = s.torus(t.n);
  auto net = torus_from_weights(t.n, in_mode(raw.a, cfg.mode), in_mode(raw.b, cfg.mode));
  input = json::parse(torus_to_json(net));
  return verify_theorem1(net, cfg.tol, cfg.sign);
}

Report psi_trial(const Trial& t, const VerifyConfig& cfg, json& input) {
  Sampler s(t.seed);
  auto e = in_mode(s.eigendata(t.n), cfg.mode);
  auto y = in_mode(s.free_block(t.n), cfg.mode);
  input = {{"eigendata", eigendata_to_json(e)}, {"free_block", free_block_to_json(y)}};
  auto r = psi(e, y, cfg.tol);
  auto rep = check_psi(r, e, cfg.tol);
  auto v = face_constraint_violations(r.faces, e, cfg.tol);
  ClaimResult c{"eq1", v.empty(), v.empty() ? "" : v.front()};
  rep.claims.insert(rep.claims.begin(), c);
  return rep;
}

Report roundtrip_trial(const Trial& t, const VerifyConfig& cfg, json& input) {
  Sampler s(t.seed);
  auto e = in_mode(s.eigendata(t.n), cfg.mode);
  auto y = in_mode(s.free_block(t.n), cfg.mode);
  input = {{"eigendata", eigendata_to_json(e)}, {"free_block", free_block_to_json(y)}};
  auto fc = solve_face_weights(e, y, cfg.tol);
  ClaimResult c{"roundtrip", true, ""};
  TorusNetwork<Scalar> net;
  try {
    net = connection_from_face_weights(fc, cfg.tol);
  } catch (const InternalError& ex) {
    c.passed = false;
    c.detail = ex.what();
    return Report{{c}};
  }
  auto conn = net.connection();
  for (int x = 0; x < t.n && c.passed; ++x)
    for (int yy = 0; yy < t.n && c.passed; ++yy) {
      auto m = monodromy(net.graph, conn, net.face(x, yy));
      if (!close(m, fc.at(x, yy), cfg.tol)) {
        c.passed = false;
        c.detail = "face (" + std::to_string(x) + "," + std::to_string(yy) + "): " + m.str() + " != " + fc.at(x, yy).str();
      }
    }
  if (c.passed && !close(monodromy(net.graph, conn, net.gamma_x()), fc.x_x, cfg.tol)) c = {"roundtrip", false, "X_x"};
  if (c.passed && !close(monodromy(net.graph, conn, net.gamma_y()), fc.x_y, cfg.tol)) c = {"roundtrip", false, "X_y"};
  return Report{{c}};
}

Outcome run_trial(const Trial& t, const VerifyConfig& cfg) {
  Outcome o;
  try {
    if (t.name == "lemma2") o.report = lemma2_trial(t, cfg, o.input);
    else if (t.name == "theorem1") o.report = theorem1_trial(t, cfg, o.input);
    else if (t.name == "psi") o.report = psi_trial(t, cfg, o.input);
    else o.report = roundtrip_trial(t, cfg, o.input);
  } catch (const Error& ex) {
    o.report.claims.push_back({"error", false, ex.what()});
  }
  return o;
}

}  // namespace

VerifyResult run_verify(const VerifyConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min) throw PreconditionError("need 1 <= n_min <= n_max");
  if (config.trials < 1) throw PreconditionError("need at least one trial");
  if (config.mode == Mode::Float && !(config.tol > 0)) throw PreconditionError("float mode needs a positive tolerance");
  for (const auto& s : config.suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw PreconditionError("unknown suite '" + s + "'");

  VerifyResult result;
  result.config = config;
  std::vector<Trial> trials;
  for (const auto& name : config.suites) {
    auto stream = static_cast<std::uint64_t>(std::find(known_suites().begin(), known_suites().end(), name) -
                                             known_suites().begin());
    for (int n = config.n_min; n <= config.n_max; ++n) {
      result.suites.push_back({name, n, config.trials, {}, true, nullptr});
      for (int i = 0; i < config.trials; ++i)
        trials.push_back({result.suites.size() - 1, name, n, i, trial_seed(config.seed, stream * 1024 + n, i)});
    }
  }

  std::vector<Outcome> outcomes(trials.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials.size(); i = next++) outcomes[i] = run_trial(trials[i], config);
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(trials.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < trials.size(); ++i) {
    auto& s = result.suites[trials[i].suite];
    const auto& o = outcomes[i];
    const ClaimResult* first_failure = nullptr;
    for (const auto& c : o.report.claims) {
      auto& cnt = s.counts[c.claim];
      (c.passed ? cnt.first : cnt.second)++;
      if (!c.passed && !first_failure) first_failure = &c;
    }
    if (first_failure && s.passed) {
      s.passed = false;
      s.witness = {{"trial", trials[i].index},
                   {"seed", trials[i].seed},
                   {"claim", first_failure->claim},
                   {"detail", first_failure->detail},
                   {"input", o.input}};
    }
  }
  return result;
}

}  // namespace isopair
