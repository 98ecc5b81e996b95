#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "isopair/cli.hpp"
#include "isopair/io.hpp"
#include "isopair/verify.hpp"
#include "json.hpp"

using namespace isopair;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "isopair");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = "/tmp/isopair_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("eigen data and free block JSON") {
  auto e = eigendata_from_json(R"({"n":2,"alpha":["2",3],"beta":["5","7"],"gamma":["1","35/6"]})");
  CHECK(e.alpha[1] == Scalar(3));
  CHECK(e.gamma[1] == Scalar::rational(35, 6));
  CHECK(eigendata_from_json(eigendata_to_json(e).dump()).gamma == e.gamma);
  auto y = free_block_from_json(R"({"n":3,"Y":[["1/2","-3"]]})");
  CHECK(y.at(0, 1) == Scalar(-3));
  CHECK(free_block_to_json(y)["Y"][0][0] == "1/2");
  CHECK_THROWS_AS(free_block_from_json(R"({"n":3,"Y":[["1"]]})"), ParseError);
  CHECK_THROWS_AS(eigendata_from_json("{"), ParseError);
  CHECK_THROWS_AS(eigendata_from_json(R"({"n":1,"alpha":["x"],"beta":["1"],"gamma":["1"]})"), ParseError);
}

TEST_CASE("pair on the two-by-two example") {
  auto path = temp_file("e2.json", R"({"n":2,"alpha":["2","3"],"beta":["5","7"],"gamma":["1","35/6"]})");
  auto r = run({"pair", "--eigen", path});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["spectra"]["A"] == json{"2", "3"});
  CHECK(j["spectra"]["B"] == json{"5", "7"});
  CHECK(j["spectra"]["BA^-1"] == json{"1", "35/6"});
  CHECK(j["passed"] == true);
}

TEST_CASE("pair for n = 1 is the pair of eigenvalues") {
  auto path = temp_file("e1.json", R"({"n":1,"alpha":["2"],"beta":["5"],"gamma":["5/2"]})");
  auto r = run({"pair", "--eigen", path});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["A"] == json{{"2"}});
  CHECK(j["B"] == json{{"5"}});
}

TEST_CASE("pair with an explicit free block") {
  auto e = temp_file("e3.json", R"({"n":3,"alpha":["2","3","-1"],"beta":["5","7","1/2"],"gamma":["1","2","-35/24"]})");
  auto y = temp_file("y3.json", R"({"n":3,"Y":[["2","-1/3"]]})");
  auto r = run({"pair", "--eigen", e, "--free", y});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["face_grid"]["X"][0][0] == "2");
}

TEST_CASE("exit codes") {
  auto bad = temp_file("bad.json", R"({"n":2,"alpha":["2","3"],"beta":["5","7"],"gamma":["1","5"]})");
  auto r = run({"pair", "--eigen", bad});
  CHECK(r.code == cli::kPrecondition);
  CHECK(r.err.find("6/7") != std::string::npos);
  CHECK(run({"pair", "--eigen", temp_file("broken.json", "{\"n\":")}).code == cli::kParse);
  CHECK(run({"pair", "--eigen", "/nonexistent/file.json"}).code == cli::kParse);
  CHECK(run({"frobnicate"}).code == cli::kParse);
  CHECK(run({"dim", "--g", "x"}).code == cli::kParse);
  CHECK(run({"dim", "--g", "0", "--k", "2", "--n", "3"}).code == cli::kPrecondition);
  CHECK(run({"polygon", "--g", "1", "--k", "10"}).code == cli::kPrecondition);
  CHECK(run({"verify", "--mode", "fuzzy"}).code == cli::kParse);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("dim, rank, polygon, triangulate") {
  auto d = run({"dim", "--g", "0", "--k", "3", "--n", "4"});
  CHECK(d.code == 0);
  CHECK(d.out == "6\n");
  CHECK(json::parse(run({"dim", "--g", "2", "--k", "3", "--n", "2", "--format", "json"}).out)["dimension"] == 16);

  auto r = run({"rank", "--g", "1", "--k", "2", "--n", "2"});
  CHECK(r.code == 0);
  auto rj = json::parse(r.out);
  CHECK(rj["rank"] == 3);
  CHECK(rj["free_count"] == rj["dimension"]);

  auto p = json::parse(run({"polygon", "--g", "1", "--k", "9"}).out);
  CHECK(p["vertices"] == json{{0, 0}, {3, 0}, {0, 3}});
  CHECK(p["interior"] == 1);
  CHECK(p["boundary"] == 9);

  auto t = json::parse(run({"triangulate", "--g", "1", "--k", "2"}).out);
  CHECK(t["triangles"].size() == 4);
  CHECK(t["conjugate"]["euler"] == -2);
}

TEST_CASE("export colours every zig-zag") {
  auto r = run({"export", "--graph", "Gn", "--g", "0", "--k", "3", "--n", "2", "--format", "dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
  for (const char* c : {"red", "blue", "purple", "orange", "brown", "darkgreen"})
    CHECK(r.out.find(c) != std::string::npos);
  auto j = json::parse(run({"export", "--graph", "G", "--g", "0", "--k", "3"}).out);
  CHECK(j["vertices"].size() == 2);
  CHECK(run({"export", "--graph", "torus", "--n", "3", "--format", "dot"}).code == 0);
  CHECK(run({"export", "--graph", "H"}).code == cli::kParse);
}

TEST_CASE("verify is deterministic and writes to --out") {
  auto a = run({"verify", "--seed", "7", "--n", "3", "--trials", "5", "--threads", "3"});
  auto b = run({"verify", "--seed", "7", "--n", "3", "--trials", "5", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["passed"] == true);
  std::string path = "/tmp/isopair_test_report.json";
  std::remove(path.c_str());
  CHECK(run({"verify", "--seed", "7", "--n", "3", "--trials", "5", "--out", path}).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("corrupted sign is caught with a witness") {
  auto r = run({"verify", "--seed", "1", "--n", "3", "--trials", "3", "--suite", "lemma2", "--corrupt-sign"});
  CHECK(r.code == cli::kFailure);
  auto j = json::parse(r.out);
  CHECK(j["passed"] == false);
  bool witnessed = false;
  for (const auto& s : j["suites"])
    if (s.contains("witness")) {
      witnessed = true;
      CHECK(s["witness"]["claim"].get<std::string>().rfind("lemma2", 0) == 0);
      CHECK(s["witness"]["input"].is_array());
    }
  CHECK(witnessed);
}

TEST_CASE("float mode verification") {
  VerifyConfig cfg;
  cfg.mode = Mode::Float;
  cfg.tol = 1e-8;
  cfg.trials = 10;
  cfg.seed = 5;
  auto res = run_verify(cfg);
  CHECK(res.passed());
}

TEST_CASE("suite trials are independent of the trial count") {
  VerifyConfig small, large;
  small.trials = 2;
  large.trials = 4;
  small.n_max = large.n_max = 2;
  small.suites = large.suites = {"psi"};
  small.seed = large.seed = 9;
  auto rs = run_verify(small), rl = run_verify(large);
  CHECK(rs.passed());
  CHECK(rl.passed());
  CHECK_THROWS_AS(run_verify(VerifyConfig{0, 2}), PreconditionError);
}
