// SPDX-License-Identifier: Apache-2.0

#include "irsnoma/channel.hpp"

#include <stdexcept>
#include <utility>

#include "irsnoma/rng.hpp"

namespace irsnoma {

void SystemConfig::validate() const {
  if (num_users != 2) throw std::invalid_argument("SystemConfig: exactly two users are supported");
  if (num_antennas < 1) throw std::invalid_argument("SystemConfig: need at least one AP antenna");
  if (num_irs_elements < 0) throw std::invalid_argument("SystemConfig: negative IRS size");
  if (total_power <= 0.0) throw std::invalid_argument("SystemConfig: transmit power must be positive");
  if (noise_var < 0.0 || err_var_au < 0.0 || err_var_iu < 0.0)
    throw std::invalid_argument("SystemConfig: variances must be non-negative");
  if (shadow_std_db < 0.0) throw std::invalid_argument("SystemConfig: shadowing std must be non-negative");
  for (double d : dist_au_km)
    if (d <= 0.0) throw std::invalid_argument("SystemConfig: AP-user distance must be positive");
  for (double d : dist_iu_km)
    if (d <= 0.0) throw std::invalid_argument("SystemConfig: IRS-user distance must be positive");
  if (dist_ai_km <= 0.0) throw std::invalid_argument("SystemConfig: AP-IRS distance must be positive");
}

bool PhaseVector::unit_modulus(double tol) const {
  for (arma::uword i = 0; i < theta.n_elem; ++i)
    if (std::abs(std::abs(theta(i)) - 1.0) > tol) return false;
  return true;
}

PhaseVector PhaseVector::all_ones(arma::uword m) {
  PhaseVector v;
  v.theta = arma::cx_rowvec(m, arma::fill::ones);
  return v;
}

double pathloss_linear(double d_km, double z_db) {
  if (!(d_km > 0.0)) throw std::invalid_argument("pathloss_linear: distance must be positive");
  const double loss_db = -127.8 - 27.0 * std::log10(d_km) + z_db;
  return db_to_linear(loss_db);
}

arma::cx_mat cascaded_channel(const arma::cx_rowvec& h_iu, const arma::cx_mat& g_ai) {
  if (h_iu.n_elem != g_ai.n_rows)
    throw std::invalid_argument("cascaded_channel: IRS-user length must match AP-IRS rows");
  arma::cx_mat out = g_ai;
  out.each_col() %= h_iu.st();
  return out;
}

arma::cx_rowvec effective_channel(const arma::cx_rowvec& h_au, const PhaseVector& v,
                                  const arma::cx_mat& h_c) {
  if (v.size() != h_c.n_rows || h_au.n_elem != h_c.n_cols)
    throw std::invalid_argument("effective_channel: dimension mismatch");
  if (h_c.n_rows == 0) return h_au;
  return h_au + v.theta * h_c;
}

double effective_error_variance(double err_var_au, double err_var_iu, int num_irs_elements,
                                double beta_ai) {
  return err_var_au + static_cast<double>(num_irs_elements) * err_var_iu * beta_ai;
}

double effective_error_variance(const SystemConfig& cfg, const ChannelRealization& ch) {
  return effective_error_variance(cfg.err_var_au, cfg.err_var_iu, cfg.num_irs_elements, ch.beta_ai);
}

arma::cx_mat ChannelRealization::h_c_true(int user) const {
  return cascaded_channel(h_iu_true[static_cast<std::size_t>(user)], g_ai);
}

namespace {

// Stream tags; the order is frozen so seeds stay stable across versions.
enum Component : std::uint64_t {
  kShadowAu0 = 0,
  kShadowAu1,
  kShadowIu0,
  kShadowIu1,
  kShadowAi,
  kHau0,
  kHau1,
  kHiu0,
  kHiu1,
  kGai,
  kErrAu0,
  kErrAu1,
  kErrIu0,
  kErrIu1,
};

GaussianStream component_stream(std::uint64_t trial_seed, Component c) {
  return GaussianStream(derive_seed(trial_seed, static_cast<std::uint64_t>(c)));
}

void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
}

void hash_mat(std::uint64_t& h, const arma::cx_mat& m) {
  hash_bytes(h, m.memptr(), m.n_elem * sizeof(std::complex<double>));
}

}  // namespace

ChannelRealization sample_channels(const SystemConfig& cfg, std::uint64_t trial_seed) {
  cfg.validate();
  const auto n = static_cast<arma::uword>(cfg.num_antennas);
  const auto m = static_cast<arma::uword>(cfg.num_irs_elements);

  ChannelRealization ch;

  const auto shadow = [&](Component c) {
    return component_stream(trial_seed, c).real_gauss(cfg.shadow_std_db);
  };
  ch.beta_au[0] = pathloss_linear(cfg.dist_au_km[0], shadow(kShadowAu0)) * db_to_linear(cfg.gain_au_db);
  ch.beta_au[1] = pathloss_linear(cfg.dist_au_km[1], shadow(kShadowAu1)) * db_to_linear(cfg.gain_au_db);
  ch.beta_iu[0] = pathloss_linear(cfg.dist_iu_km[0], shadow(kShadowIu0)) * db_to_linear(cfg.gain_iu_db);
  ch.beta_iu[1] = pathloss_linear(cfg.dist_iu_km[1], shadow(kShadowIu1)) * db_to_linear(cfg.gain_iu_db);
  ch.beta_ai = pathloss_linear(cfg.dist_ai_km, shadow(kShadowAi)) * db_to_linear(cfg.gain_ai_db);

  for (int k = 0; k < 2; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    ch.h_au_true[ks] = component_stream(trial_seed, Component(kHau0 + k)).circular_row(n, ch.beta_au[ks]);
    ch.h_iu_true[ks] = component_stream(trial_seed, Component(kHiu0 + k)).circular_row(m, ch.beta_iu[ks]);
  }
  ch.g_ai = component_stream(trial_seed, kGai).circular_mat(m, n, ch.beta_ai);

  // Errors are drawn independently of the truth; the estimate is truth minus
  // error. The AP-IRS link is treated as known inside the cascade, so only
  // the direct and IRS-user hops carry estimation error.
  for (int k = 0; k < 2; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const arma::cx_rowvec err_au =
        component_stream(trial_seed, Component(kErrAu0 + k)).circular_row(n, cfg.err_var_au);
    const arma::cx_rowvec err_iu =
        component_stream(trial_seed, Component(kErrIu0 + k)).circular_row(m, cfg.err_var_iu);
    ch.h_au_est[ks] = ch.h_au_true[ks] - err_au;
    ch.h_iu_est[ks] = ch.h_iu_true[ks] - err_iu;
    ch.h_c_est[ks] = cascaded_channel(ch.h_iu_est[ks], ch.g_ai);
  }

  // Stronger estimated effective channel (all-ones phases) gets index 0.
  const PhaseVector ones = PhaseVector::all_ones(m);
  const double n0 = arma::norm(effective_channel(ch.h_au_est[0], ones, ch.h_c_est[0]));
  const double n1 = arma::norm(effective_channel(ch.h_au_est[1], ones, ch.h_c_est[1]));
  if (n0 < n1) {
    std::swap(ch.h_au_true[0], ch.h_au_true[1]);
    std::swap(ch.h_iu_true[0], ch.h_iu_true[1]);
    std::swap(ch.h_au_est[0], ch.h_au_est[1]);
    std::swap(ch.h_iu_est[0], ch.h_iu_est[1]);
    std::swap(ch.h_c_est[0], ch.h_c_est[1]);
    std::swap(ch.beta_au[0], ch.beta_au[1]);
    std::swap(ch.beta_iu[0], ch.beta_iu[1]);
  }
  return ch;
}

ChannelRealization perfect_csi_view(const ChannelRealization& ch) {
  ChannelRealization out = ch;
  for (std::size_t k = 0; k < 2; ++k) {
    out.h_au_est[k] = ch.h_au_true[k];
    out.h_iu_est[k] = ch.h_iu_true[k];
    out.h_c_est[k] = cascaded_channel(ch.h_iu_true[k], ch.g_ai);
  }
  return out;
}

std::uint64_t channel_hash(const ChannelRealization& ch) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::size_t k = 0; k < 2; ++k) {
    hash_mat(h, arma::cx_mat(ch.h_au_true[k]));
    hash_mat(h, arma::cx_mat(ch.h_iu_true[k]));
    hash_mat(h, arma::cx_mat(ch.h_au_est[k]));
    hash_mat(h, ch.h_c_est[k]);
    hash_bytes(h, &ch.beta_au[k], sizeof(double));
    hash_bytes(h, &ch.beta_iu[k], sizeof(double));
  }
  hash_mat(h, ch.g_ai);
  hash_bytes(h, &ch.beta_ai, sizeof(double));
  return h;
}

}  // namespace irsnoma
