// SPDX-License-Identifier: Apache-2.0

#include "irsnoma/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma {

namespace detail {

namespace {
double rate_term(double signal, double denom) {
  if (signal <= 0.0) return 0.0;
  return std::log2(1.0 + signal / denom);
}
double sq(double x) { return x * x; }
}  // namespace

NomaRates noma_rates_unchecked(const arma::cx_rowvec& h_eff_1, const arma::cx_rowvec& h_eff_2,
                               const arma::cx_mat& beams, const std::array<double, 2>& split,
                               double sigma_h_sq, double sigma_n_sq) {
  const arma::cx_colvec w1 = beams.col(0);
  const arma::cx_colvec w2 = beams.col(1);
  const double beam_power = sq(arma::norm(w1)) + sq(arma::norm(w2));
  const double base = sigma_h_sq * beam_power + sigma_n_sq;

  const double a1sq = split[0] * split[0];
  const double a2sq = split[1] * split[1];
  const double s1 = a1sq * std::norm(arma::as_scalar(h_eff_1 * w1));
  const double s2 = a2sq * std::norm(arma::as_scalar(h_eff_2 * w2));
  const double i2 = a1sq * std::norm(arma::as_scalar(h_eff_2 * w1));

  NomaRates out;
  out.r1 = rate_term(s1, base);
  out.r2 = rate_term(s2, i2 + base);
  out.rsum = out.r1 + out.r2;
  return out;
}

}  // namespace detail

NomaRates noma_rates(const arma::cx_rowvec& h_eff_1, const arma::cx_rowvec& h_eff_2,
                     const arma::cx_mat& beams, const std::array<double, 2>& split,
                     double sigma_h_sq, double sigma_n_sq) {
  if (sigma_h_sq < 0.0 || sigma_n_sq < 0.0)
    throw std::invalid_argument("noma_rates: variances must be non-negative");
  const double unit = split[0] * split[0] + split[1] * split[1];
  if (std::abs(unit - 1.0) > 1e-9)
    throw std::invalid_argument("noma_rates: power split must satisfy alpha1^2 + alpha2^2 = 1");
  return detail::noma_rates_unchecked(h_eff_1, h_eff_2, beams, split, sigma_h_sq, sigma_n_sq);
}

}  // namespace irsnoma
