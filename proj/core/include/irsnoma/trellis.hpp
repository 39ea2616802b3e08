// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <armadillo>
#include <cstdint>

#include "irsnoma/channel.hpp"

namespace irsnoma {

// Trellis layout for discrete phase selection: states are the last `memory`
// phase indices, each drawn from an alphabet of `alphabet_size` roots of
// unity.
struct TrellisConfig {
  int alphabet_size = 4;
  int memory = 3;
  std::uint64_t state_budget = 1u << 20;
};

// Alphabet symbols exp(j*2*pi*q/alphabet_size) for q = 1..alphabet_size, in
// index order (index order matters for tie-breaking).
arma::cx_rowvec phase_alphabet(int alphabet_size);

// Ordered cumulative objective over the phase sequence:
//   sum_j Re{ conj(theta_j) * (sum_{i<j} a_ij * theta_i - c_j) }.
// For unit-modulus v and Hermitian quad_a this equals
// (v A v^H - 2 Re{c v^H} - trace(A)) / 2, so minimizing it minimizes the
// quadratic phase objective.
double trellis_benchmark(const PhaseVector& v, const arma::cx_mat& quad_a,
                         const arma::cx_rowvec& quad_c);

// Per-survivor trellis search over the alphabet. States merge on the last
// `memory` indices while branch metrics use each survivor's full history.
// Among equal-benchmark survivors the path angularly closest to warm_start
// wins, then the lexicographically smallest index sequence. Throws
// std::invalid_argument when memory exceeds the sequence length or the state
// count exceeds the budget.
PhaseVector trellis_search(const arma::cx_mat& quad_a, const arma::cx_rowvec& quad_c,
                           const TrellisConfig& cfg, const PhaseVector* warm_start = nullptr);

// Nearest-alphabet-symbol rounding by angular distance; near-exact ties go to
// the smaller symbol index.
PhaseVector quantize_phases(const PhaseVector& v, int alphabet_size);

// Global minimizer of the benchmark over all alphabet_size^M assignments.
// Refuses (std::invalid_argument) when the enumeration exceeds the budget.
PhaseVector exhaustive_search(const arma::cx_mat& quad_a, const arma::cx_rowvec& quad_c,
                              int alphabet_size, std::uint64_t budget = 1u << 21);

}  // namespace irsnoma
