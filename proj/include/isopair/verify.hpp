#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isopair/scalar.hpp"
#include "isopair/transfer.hpp"
#include "json.hpp"

namespace isopair {

/// Seeded property suites:
///   lemma2     combinatorial vs algebraic D on random T and T' cells
///   theorem1   zig-zag eigenvalues, triangularity and conjugation on random tori
///   psi        spectra of the parameterized pair and the face relations (eq1)
///   roundtrip  face weights -> connection -> face weights
struct VerifyConfig {
  int n_min = 1, n_max = 4;
  int trials = 50;
  std::uint64_t seed = 0;
  Mode mode = Mode::Exact;
  double tol = 1e-8;
  unsigned threads = 0;  // 0: hardware concurrency
  SignConvention sign = SignConvention::Standard;
  std::vector<std::string> suites = {"lemma2", "theorem1", "psi", "roundtrip"};
};

const std::vector<std::string>& known_suites();

struct SuiteResult {
  std::string suite;
  int n = 0;
  int trials = 0;
  std::map<std::string, std::pair<int, int>> counts;  // claim -> (passed, failed)
  bool passed = true;
  nlohmann::json witness;  // first failing trial, or null
};

struct VerifyResult {
  VerifyConfig config;
  std::vector<SuiteResult> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Trials are independent (seed, suite, n, index) draws, run on a worker pool
/// and reported in index order. Throws PreconditionError on a bad config.
VerifyResult run_verify(const VerifyConfig& config);

}  // namespace isopair
