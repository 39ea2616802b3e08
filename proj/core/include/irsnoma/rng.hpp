// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace irsnoma {

// SplitMix64 finalizer, used to spread seed bits before feeding an engine.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a stream tag.
// Counter-based, so worker scheduling never changes which stream sees which
// seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return splitmix64(base + 0x9E3779B97F4A7C15ULL * (tag + 1));
}

// Seeded Gaussian draw stream. Each independent model component (one channel
// vector, one error vector, one shadowing coefficient) owns its own stream so
// that changing the size of one component leaves every other draw untouched.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double real_gauss(double stddev) { return stddev * normal_(engine_); }

  // Circularly-symmetric complex Gaussian with the given per-entry variance.
  // Draws are consumed even when variance is zero to keep streams aligned
  // across scenarios that differ only in scale.
  std::complex<double> circular(double variance) {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    const double s = std::sqrt(variance / 2.0);
    return {s * re, s * im};
  }

  arma::cx_rowvec circular_row(arma::uword n, double variance) {
    arma::cx_rowvec out(n, arma::fill::none);
    for (arma::uword i = 0; i < n; ++i) out(i) = circular(variance);
    return out;
  }

  // Filled row-major so the leading rows coincide between two matrices of
  // different heights drawn from the same seed.
  arma::cx_mat circular_mat(arma::uword rows, arma::uword cols, double variance) {
    arma::cx_mat out(rows, cols, arma::fill::none);
    for (arma::uword r = 0; r < rows; ++r)
      for (arma::uword c = 0; c < cols; ++c) out(r, c) = circular(variance);
    return out;
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace irsnoma
