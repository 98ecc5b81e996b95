#include "isopair/sampling.hpp"

namespace isopair {

Scalar Sampler::rational() {
  std::uniform_int_distribution<long> num(-bound_, bound_), den(1, bound_);
  long p = 0;
  while (p == 0) p = num(rng_);
  return Scalar::rational(p, den(rng_));
}

Scalar Sampler::positive_rational() {
  std::uniform_int_distribution<long> d(1, bound_);
  long p = d(rng_);
  return Scalar::rational(p, d(rng_));
}

TriangleNetwork<Scalar> Sampler::triangle(Kind kind, int n) {
  std::map<Label, Scalar> a, b;
  for (const auto& l : black_labels(kind, n)) {
    a[l] = rational();
    b[l] = rational();
  }
  return build_triangle(kind, n, std::move(a), std::move(b));
}

TorusNetwork<Scalar> Sampler::torus(int n) {
  auto t = triangle(Kind::T, n);
  auto tp = triangle(Kind::TPrime, n);
  return glue_torus(t, tp);
}

namespace {

EigenData<Scalar> close_relation(EigenData<Scalar> e) {
  Scalar last(1);
  for (int i = 0; i < e.n; ++i) last *= e.beta[i] / e.alpha[i];
  for (const auto& g : e.gamma) last /= g;
  e.gamma.push_back(last);
  return e;
}

}  // namespace

EigenData<Scalar> Sampler::eigendata(int n) {
  EigenData<Scalar> e{n, {}, {}, {}};
  for (int i = 0; i < n; ++i) e.alpha.push_back(rational());
  for (int i = 0; i < n; ++i) e.beta.push_back(rational());
  for (int i = 0; i + 1 < n; ++i) e.gamma.push_back(rational());
  return close_relation(std::move(e));
}

EigenData<Scalar> Sampler::positive_eigendata(int n) {
  EigenData<Scalar> e{n, {}, {}, {}};
  for (int i = 0; i < n; ++i) e.alpha.push_back(positive_rational());
  for (int i = 0; i < n; ++i) e.beta.push_back(positive_rational());
  for (int i = 0; i + 1 < n; ++i) e.gamma.push_back(n % 2 ? positive_rational() : negative_rational());
  // For even n the closing gamma_n has sign (-1)^{n-1} = -1 as required.
  return close_relation(std::move(e));
}

FreeBlock<Scalar> Sampler::free_block(int n, bool positive) {
  FreeBlock<Scalar> y{n, {}};
  for (std::size_t k = 0; k < y.rows() * y.cols(); ++k) y.y.push_back(positive ? positive_rational() : rational());
  return y;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace isopair
