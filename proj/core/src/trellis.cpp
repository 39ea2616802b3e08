// SPDX-License-Identifier: Apache-2.0

#include "irsnoma/trellis.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace irsnoma {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// j-th benchmark term given the phases of indices 0..j (inclusive).
double benchmark_term(arma::uword j, const arma::cx_rowvec& theta, const arma::cx_mat& quad_a,
                      const arma::cx_rowvec& quad_c) {
  std::complex<double> acc = -quad_c(j);
  for (arma::uword i = 0; i < j; ++i) acc += quad_a(i, j) * theta(i);
  return std::real(std::conj(theta(j)) * acc);
}

double principal_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a > std::numbers::pi) a -= kTwoPi;
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

// Sum of angular distances between an index path and a reference vector.
double angular_distance(const std::vector<std::uint8_t>& path, const arma::cx_rowvec& alphabet,
                        const arma::cx_rowvec& reference) {
  double d = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i)
    d += std::abs(principal_angle(std::arg(alphabet(path[i])) - std::arg(reference(i))));
  return d;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

struct Survivor {
  std::vector<std::uint8_t> path;
  double benchmark = 0.0;
  bool alive = false;
};

// True when lhs should replace rhs as the survivor of a state.
bool survivor_better(const Survivor& lhs, const Survivor& rhs, const arma::cx_rowvec& alphabet,
                     const arma::cx_rowvec* reference) {
  if (!rhs.alive) return true;
  if (lhs.benchmark < rhs.benchmark) return true;
  if (lhs.benchmark > rhs.benchmark) return false;
  if (reference != nullptr) {
    const double dl = angular_distance(lhs.path, alphabet, *reference);
    const double dr = angular_distance(rhs.path, alphabet, *reference);
    if (dl < dr) return true;
    if (dl > dr) return false;
  }
  return lhs.path < rhs.path;
}

PhaseVector path_to_phases(const std::vector<std::uint8_t>& path, const arma::cx_rowvec& alphabet,
                           int alphabet_size) {
  PhaseVector v;
  v.alphabet_size = alphabet_size;
  v.theta.set_size(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) v.theta(i) = alphabet(path[i]);
  return v;
}

}  // namespace

arma::cx_rowvec phase_alphabet(int alphabet_size) {
  if (alphabet_size < 1) throw std::invalid_argument("phase_alphabet: need at least one symbol");
  arma::cx_rowvec out(static_cast<arma::uword>(alphabet_size), arma::fill::none);
  for (int q = 1; q <= alphabet_size; ++q)
    out(q - 1) = std::polar(1.0, kTwoPi * q / alphabet_size);
  return out;
}

double trellis_benchmark(const PhaseVector& v, const arma::cx_mat& quad_a,
                         const arma::cx_rowvec& quad_c) {
  const arma::uword m = v.size();
  if (quad_a.n_rows != m || quad_a.n_cols != m || quad_c.n_elem != m)
    throw std::invalid_argument("trellis_benchmark: dimension mismatch");
  double total = 0.0;
  for (arma::uword j = 0; j < m; ++j) total += benchmark_term(j, v.theta, quad_a, quad_c);
  return total;
}

PhaseVector trellis_search(const arma::cx_mat& quad_a, const arma::cx_rowvec& quad_c,
                           const TrellisConfig& cfg, const PhaseVector* warm_start) {
  const int m = static_cast<int>(quad_c.n_elem);
  const int q = cfg.alphabet_size;
  if (q < 1) throw std::invalid_argument("trellis_search: alphabet must be non-empty");
  if (cfg.memory < 1 || cfg.memory > m)
    throw std::invalid_argument("trellis_search: memory must lie in [1, M]");
  const int memory = cfg.memory;

  const std::uint64_t n_states =
      checked_pow(static_cast<std::uint64_t>(q), memory, cfg.state_budget);
  if (n_states > cfg.state_budget)
    throw std::invalid_argument("trellis_search: state count exceeds budget");

  const arma::cx_rowvec alphabet = phase_alphabet(q);
  const arma::cx_rowvec* reference =
      (warm_start != nullptr && warm_start->size() == static_cast<arma::uword>(m))
          ? &warm_start->theta
          : nullptr;

  // Seed one survivor per state from the first `memory` benchmark terms.
  // State index digits are oldest-first base-q.
  std::vector<Survivor> survivors(n_states);
  arma::cx_rowvec theta(static_cast<arma::uword>(m), arma::fill::zeros);
  for (std::uint64_t s = 0; s < n_states; ++s) {
    Survivor sv;
    sv.alive = true;
    sv.path.resize(static_cast<std::size_t>(memory));
    std::uint64_t rem = s;
    for (int i = memory - 1; i >= 0; --i) {
      sv.path[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rem % q);
      rem /= q;
    }
    for (int i = 0; i < memory; ++i) theta(i) = alphabet(sv.path[static_cast<std::size_t>(i)]);
    sv.benchmark = 0.0;
    for (int j = 0; j < memory; ++j)
      sv.benchmark += benchmark_term(static_cast<arma::uword>(j), theta, quad_a, quad_c);
    survivors[s] = std::move(sv);
  }

  const std::uint64_t tail_states = n_states / static_cast<std::uint64_t>(q);
  std::vector<Survivor> next(n_states);
  for (int stage = memory; stage < m; ++stage) {
    for (auto& sv : next) sv.alive = false;
    for (std::uint64_t s = 0; s < n_states; ++s) {
      const Survivor& from = survivors[s];
      if (!from.alive) continue;
      for (std::size_t i = 0; i < from.path.size(); ++i) theta(i) = alphabet(from.path[i]);
      for (int b = 0; b < q; ++b) {
        theta(static_cast<arma::uword>(stage)) = alphabet(b);
        const double metric =
            benchmark_term(static_cast<arma::uword>(stage), theta, quad_a, quad_c);
        Survivor cand;
        cand.alive = true;
        cand.path = from.path;
        cand.path.push_back(static_cast<std::uint8_t>(b));
        cand.benchmark = from.benchmark + metric;
        const std::uint64_t to = (s % tail_states) * q + static_cast<std::uint64_t>(b);
        if (survivor_better(cand, next[to], alphabet, reference)) next[to] = std::move(cand);
      }
    }
    survivors.swap(next);
  }

  const Survivor* best = nullptr;
  for (const auto& sv : survivors) {
    if (!sv.alive) continue;
    if (best == nullptr || survivor_better(sv, *best, alphabet, reference)) best = &sv;
  }
  return path_to_phases(best->path, alphabet, q);
}

PhaseVector quantize_phases(const PhaseVector& v, int alphabet_size) {
  if (alphabet_size < 1) throw std::invalid_argument("quantize_phases: need at least one symbol");
  const arma::cx_rowvec alphabet = phase_alphabet(alphabet_size);
  constexpr double kTieTol = 1e-9;
  PhaseVector out;
  out.alphabet_size = alphabet_size;
  out.theta.set_size(v.size());
  for (arma::uword i = 0; i < v.size(); ++i) {
    const double ang = std::arg(v.theta(i));
    double best = std::numeric_limits<double>::infinity();
    int best_q = 0;
    for (int q = 1; q <= alphabet_size; ++q) {
      const double target = principal_angle(kTwoPi * q / alphabet_size);
      const double dist = std::abs(principal_angle(ang - target));
      if (dist < best - kTieTol) {
        best = dist;
        best_q = q;
      }
    }
    out.theta(i) = alphabet(best_q - 1);
  }
  return out;
}

PhaseVector exhaustive_search(const arma::cx_mat& quad_a, const arma::cx_rowvec& quad_c,
                              int alphabet_size, std::uint64_t budget) {
  const int m = static_cast<int>(quad_c.n_elem);
  if (alphabet_size < 1) throw std::invalid_argument("exhaustive_search: alphabet must be non-empty");
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(alphabet_size), m, budget);
  if (count > budget)
    throw std::invalid_argument("exhaustive_search: alphabet_size^M exceeds the enumeration budget");

  const arma::cx_rowvec alphabet = phase_alphabet(alphabet_size);
  std::vector<std::uint8_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<std::uint8_t> best_idx = idx;
  PhaseVector v;
  v.alphabet_size = alphabet_size;
  v.theta.set_size(static_cast<arma::uword>(m));

  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t it = 0; it < count; ++it) {
    for (int i = 0; i < m; ++i) v.theta(i) = alphabet(idx[static_cast<std::size_t>(i)]);
    const double val = trellis_benchmark(v, quad_a, quad_c);
    if (val < best) {  // lexicographic enumeration keeps first-found on ties
      best = val;
      best_idx = idx;
    }
    for (int i = m - 1; i >= 0; --i) {
      auto& d = idx[static_cast<std::size_t>(i)];
      if (++d < alphabet_size) break;
      d = 0;
    }
  }
  for (int i = 0; i < m; ++i) v.theta(i) = alphabet(best_idx[static_cast<std::size_t>(i)]);
  return v;
}

}  // namespace irsnoma
