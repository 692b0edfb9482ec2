// Copyright 2026 The tsvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Measurement dynamics in ordinary forward-only quantum mechanics: projective
// collapse, Monte Carlo pre/post-selected ensembles, an exact two-step Born
// rule oracle, and a von Neumann pointer with a Gaussian wavefunction.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "tsvlab/qcore.hpp"
#include "tsvlab/tsv.hpp"

namespace tsvlab {

using Rng = std::mt19937_64;

/// Seed used by every randomized command when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20261015;

/// Uniform draw in [0, 1) built from the top 53 bits, identical on every
/// platform for a given engine state.
double uniform01(Rng& rng);

/// Seed of worker stream w: splitmix64(seed + (w + 1) * 0x9E3779B97F4A7C15).
std::uint64_t worker_stream_seed(std::uint64_t seed, unsigned worker);

struct MeasurementRecord {
  double outcome;
  std::size_t index;  // position in obs.spectrum()
  Ket post_state;
  double probability;
};

/// Samples o_n with probability |P_n psi|^2 and collapses onto P_n psi.
MeasurementRecord ideal_measure(const Ket& state, const Observable& obs, Rng& rng);

/// Orthonormal basis whose first vector is the post-selected state; the rest
/// come from Gram-Schmidt on the standard basis, in index order.
std::vector<Vector> complete_basis(const Bra& post);

struct OutcomeTally {
  double value;
  std::uint64_t count;
  double frequency;
  double standard_error;

  bool operator==(const OutcomeTally&) const = default;
};

struct MonteCarloReport {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t samples_total = 0;
  std::uint64_t samples_postselected = 0;
  std::vector<OutcomeTally> outcomes;

  bool operator==(const MonteCarloReport&) const = default;
};

/// Simulates the ensemble: prepare pre, measure obs, then measure in a
/// complete basis containing post and keep the trial iff post occurs. Trials
/// are split into contiguous blocks per worker with independent streams and
/// merged in worker order, so the report depends only on (seed, workers).
MonteCarloReport monte_carlo_abl(const Ket& pre, const Bra& post, const Observable& obs,
                                 std::uint64_t n_samples, std::uint64_t seed, unsigned workers = 1);

/// p(o_n) * p(post | collapsed onto o_n), normalized. Shares no code with the
/// ABL formula.
Distribution exact_conditional_oracle(const Ket& pre, const Bra& post, const Observable& obs);

struct PointerConfig {
  double coupling;  // pointer shift per unit eigenvalue
  double sigma;     // pointer wavefunction width, psi(q) ~ exp(-q^2 / (2 sigma^2))
  double half_range;
  std::size_t points;

  static constexpr std::size_t kMinPoints = 4096;

  /// Smallest grid satisfying validate(), with spacing at most sigma / 4.
  static PointerConfig auto_sized(double coupling, double sigma, const Observable& obs);
  /// Throws ConfigError unless coupling, sigma > 0, points >= kMinPoints and
  /// half_range >= 10 (sigma + coupling max|o_n|).
  void validate(const Observable& obs) const;
};

struct PointerResult {
  std::vector<double> positions;
  std::vector<double> density;
  double mean_shift = 0.0;
  double postselection_rate = 0.0;
};

/// Conditional pointer state phi(q) = sum_n <phi|P_n|psi> G(q - g o_n) on the
/// grid; density is |phi|^2 normalized by the trapezoid rule.
PointerResult weak_measure_pointer(const TwoStateVector& tsv, const Observable& obs,
                                   const PointerConfig& cfg);

double trapezoid(std::span<const double> x, std::span<const double> y);

/// Pointer mass around each g * o_n, split at midpoints between neighbours.
std::vector<double> bump_masses(const PointerResult& result, const Observable& obs, double coupling);

/// Two columns: position,density.
void write_density_csv(const PointerResult& result, std::ostream& out);

struct ConsistencyReport {
  CertaintyReport strong;
  Complex weak;
  bool dichotomic = false;
  /// Certain strong outcome o_i implies O_w == o_i.
  bool strong_implies_weak = true;
  /// Dichotomic only: O_w equal to an eigenvalue implies that outcome is certain.
  bool weak_implies_strong = true;

  bool passed() const { return strong_implies_weak && weak_implies_strong; }
};

ConsistencyReport strong_weak_consistency(const TwoStateVector& tsv, const Observable& obs,
                                          double tol = kCertaintyTol);

struct TwoTimeSampleReport {
  std::uint64_t samples_total = 0;
  std::uint64_t samples_accepted = 0;
  std::uint64_t same_count = 0;

  double same_frequency() const;
  double standard_error() const;
};

/// Sequential realization of a two-time kernel: draw a basis state |b> of
/// obs_b uniformly, pass it through the filter K (accepted with probability
/// |K b|^2 / s_max^2), then measure obs_a. The accepted joint frequencies
/// follow |<a|K|b>|^2.
TwoTimeSampleReport monte_carlo_two_time(const TwoTimeKernel& k, const Observable& obs_a,
                                         const Observable& obs_b, std::uint64_t n_samples,
                                         std::uint64_t seed);

}  // namespace tsvlab
