// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <armadillo>
#include <array>
#include <cstdint>

#include "irsnoma/system.hpp"

namespace irsnoma {

// Unit-modulus reflection coefficients of the IRS, one per element.
// alphabet_size == 0 means continuous phases; otherwise every coefficient
// lies in {exp(j*2*pi*q/alphabet_size) : q = 1..alphabet_size}.
struct PhaseVector {
  arma::cx_rowvec theta;
  int alphabet_size = 0;

  arma::uword size() const { return theta.n_elem; }
  bool unit_modulus(double tol = 1e-12) const;

  static PhaseVector all_ones(arma::uword m);
};

// One Monte-Carlo draw of every channel in the scenario, true and estimated.
// Immutable after construction; safe to share across trial workers.
struct ChannelRealization {
  std::array<arma::cx_rowvec, 2> h_au_true;  // AP-user, 1 x N
  std::array<arma::cx_rowvec, 2> h_iu_true;  // IRS-user, 1 x M
  arma::cx_mat g_ai;                         // AP-IRS, M x N

  std::array<arma::cx_rowvec, 2> h_au_est;
  std::array<arma::cx_rowvec, 2> h_iu_est;
  std::array<arma::cx_mat, 2> h_c_est;  // estimated cascaded channel, M x N

  std::array<double, 2> beta_au{};
  std::array<double, 2> beta_iu{};
  double beta_ai = 0.0;

  arma::cx_mat h_c_true(int user) const;
};

// 3GPP-style distance law: 10*log10(beta) = -127.8 - 27*log10(d_km) + z_db.
double pathloss_linear(double d_km, double z_db);

// Cascaded IRS channel diag(h_iu) * g_ai.
arma::cx_mat cascaded_channel(const arma::cx_rowvec& h_iu, const arma::cx_mat& g_ai);

// Effective AP-user channel h_au + v * h_c.
arma::cx_rowvec effective_channel(const arma::cx_rowvec& h_au, const PhaseVector& v,
                                  const arma::cx_mat& h_c);

// Variance of the effective channel error seen through the IRS:
// err_var_au + M * err_var_iu * beta_ai.
double effective_error_variance(double err_var_au, double err_var_iu, int num_irs_elements,
                                double beta_ai);
double effective_error_variance(const SystemConfig& cfg, const ChannelRealization& ch);

// Draws one realization. Deterministic in (cfg, trial_seed); users are
// relabeled so index 0 has the larger estimated effective-channel norm under
// all-ones phases.
ChannelRealization sample_channels(const SystemConfig& cfg, std::uint64_t trial_seed);

// Copy whose estimates equal the true channels (perfect-CSI view).
ChannelRealization perfect_csi_view(const ChannelRealization& ch);

// FNV-1a over the realization payload; used to assert that paired modes
// consume identical channels.
std::uint64_t channel_hash(const ChannelRealization& ch);

}  // namespace irsnoma
