// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <armadillo>
#include <array>

namespace irsnoma {

struct NomaRates {
  double r1 = 0.0;
  double r2 = 0.0;
  double rsum = 0.0;
};

// Achievable two-user NOMA rates (bits) under superposition coding with the
// estimated effective channels. The effective estimation-error variance
// sigma_h_sq enters both denominators scaled by the total beam power; user 0
// additionally sees user-1 interference cancelled while user 1 does not.
//
// beams is N x 2 (one column per user); split = (alpha_1, alpha_2) must
// satisfy alpha_1^2 + alpha_2^2 = 1 within 1e-9.
NomaRates noma_rates(const arma::cx_rowvec& h_eff_1, const arma::cx_rowvec& h_eff_2,
                     const arma::cx_mat& beams, const std::array<double, 2>& split,
                     double sigma_h_sq, double sigma_n_sq);

namespace detail {
// Same arithmetic without the power-split precondition; solver-internal.
NomaRates noma_rates_unchecked(const arma::cx_rowvec& h_eff_1, const arma::cx_rowvec& h_eff_2,
                               const arma::cx_mat& beams, const std::array<double, 2>& split,
                               double sigma_h_sq, double sigma_n_sq);
}  // namespace detail

}  // namespace irsnoma
