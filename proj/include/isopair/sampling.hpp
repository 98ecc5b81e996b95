#pragma once

#include <cstdint>
#include <random>

#include "isopair/facecoords.hpp"
#include "isopair/honeycomb.hpp"

namespace isopair {

/// Deterministic source of nonzero rationals p/q with |p|, |q| <= bound.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long bound = 20) : rng_(seed), bound_(bound) {}

  Scalar rational();
  Scalar positive_rational();
  Scalar negative_rational() { return -positive_rational(); }

  TriangleNetwork<Scalar> triangle(Kind kind, int n);
  TorusNetwork<Scalar> torus(int n);
  /// alpha, beta and gamma_1..gamma_{n-1} drawn freely; gamma_n closes the product relation.
  EigenData<Scalar> eigendata(int n);
  /// Positive alpha, beta; gamma positive for odd n and negative for even n.
  EigenData<Scalar> positive_eigendata(int n);
  FreeBlock<Scalar> free_block(int n, bool positive = false);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

/// Independent per-trial seed, so trial i does not depend on trial order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace isopair
