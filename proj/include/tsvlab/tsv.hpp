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

// Two-state vectors <phi| |psi> and their calculus: ABL probabilities, weak
// values, generalized two-state vectors, elements of reality and the
// two-time correlation kernel.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsvlab/qcore.hpp"

namespace tsvlab {

/// |<phi|psi>| at or below this makes a weak value undefined.
inline constexpr double kOrthogonalityTol = 1e-10;
/// Outcome probabilities at least 1 - tol count as certain.
inline constexpr double kCertaintyTol = 1e-10;
/// Total unnormalized ABL weight at or below this is a null ensemble.
inline constexpr double kNullWeightTol = kOrthogonalityTol * kOrthogonalityTol;

/// Backward state <phi| and forward state |psi> at a single time.
class TwoStateVector {
 public:
  TwoStateVector(Bra backward, Ket forward);

  /// The pre-selected-only system, <psi| |psi>.
  static TwoStateVector preselected_only(const Ket& psi) { return {Bra::dual(psi), psi}; }

  const Bra& backward() const { return backward_; }
  const Ket& forward() const { return forward_; }
  Complex overlap() const { return overlap_; }
  std::size_t dim() const { return forward_.dim(); }

 private:
  Bra backward_;
  Ket forward_;
  Complex overlap_;
};

struct GtsvTerm {
  Complex alpha;
  Bra backward;
  Ket forward;
};

/// sum_i alpha_i <phi_i| |psi_i>.
class GeneralizedTwoStateVector {
 public:
  /// Throws DimensionError on mismatched or empty terms, NullEnsembleError if
  /// every alpha vanishes.
  explicit GeneralizedTwoStateVector(std::vector<GtsvTerm> terms);
  GeneralizedTwoStateVector(const TwoStateVector& tsv);  // NOLINT: single-term embedding

  std::span<const GtsvTerm> terms() const { return terms_; }
  std::size_t dim() const { return terms_.front().forward.dim(); }

  /// sum_i alpha_i <phi_i|O|psi_i>.
  Complex amplitude(const Operator& op) const;
  /// sum_i alpha_i <phi_i|psi_i>.
  Complex overlap() const;

 private:
  std::vector<GtsvTerm> terms_;
};

/// Operator-valued two-time state K = sum K_ij |i>_A <j|_B linking a
/// forward-evolving particle A with a backward-evolving particle B. Rows index
/// A, columns index B.
class TwoTimeKernel {
 public:
  explicit TwoTimeKernel(Matrix kernel);

  const Matrix& matrix() const { return k_; }
  std::size_t forward_dim() const { return static_cast<std::size_t>(k_.rows()); }
  std::size_t backward_dim() const { return static_cast<std::size_t>(k_.cols()); }

 private:
  Matrix k_;
};

struct Outcome {
  double value;
  double probability;
};

/// Normalized outcome -> probability table, sorted by outcome.
class Distribution {
 public:
  /// Normalizes non-negative weights. Throws NullEnsembleError when their sum
  /// is at or below null_tol.
  static Distribution from_weights(std::span<const double> values, std::span<const double> weights,
                                   double null_tol = kNullWeightTol);

  std::span<const Outcome> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Outcome& operator[](std::size_t i) const { return entries_[i]; }
  /// Probability of the outcome within tol of value, 0 if absent.
  double probability_of(double value, double tol = 1e-9) const;
  const Outcome& most_likely() const;

 private:
  std::vector<Outcome> entries_;
};

struct CertaintyReport {
  std::string label;
  bool certain = false;
  std::optional<double> value;
  double max_probability = 0.0;
};

struct ProductRuleReport {
  CertaintyReport a;
  CertaintyReport b;
  CertaintyReport ab;
  /// Set only when all three are certain.
  std::optional<bool> product_rule_holds;
};

/// Prob(o_n) = |<phi|P_n|psi>|^2 / sum_j |<phi|P_j|psi>|^2.
Distribution abl_probabilities(const TwoStateVector& tsv, const Observable& obs);

/// Coherent sum over terms inside the modulus:
/// Prob(o_n) ~ |sum_i alpha_i <phi_i|P_n|psi_i>|^2.
Distribution abl_probabilities(const GeneralizedTwoStateVector& g, const Observable& obs);

/// Pre-selection at the schedule's start, post-selection at its end and the
/// measurement at t in between. Only the window [start, t] is applied to the
/// ket and [t, end] to the bra. Throws TimeWindowError outside the schedule.
Distribution abl_at_time(const Ket& pre, const Bra& post, const HamiltonianSchedule& schedule,
                         double t, const Observable& obs);

/// Splits joint pre/post states on S (x) A along the computational ancilla
/// basis. Term i carries |psi_i> ~ (1 (x) <i|)|pre>, <phi_i| ~ <post|(1 (x) |i>)
/// and alpha_i = |psi_i~| |phi_i~|. Terms with vanishing alpha are dropped.
GeneralizedTwoStateVector gtsv_from_ancilla(const Ket& joint_pre, const Bra& joint_post,
                                            std::size_t system_dim, std::size_t ancilla_dim);

/// <phi|O|psi> / <phi|psi>. Throws OrthogonalSelectionError when
/// |<phi|psi>| <= orthogonality_tol.
Complex weak_value(const TwoStateVector& tsv, const Operator& op,
                   double orthogonality_tol = kOrthogonalityTol);
Complex weak_value(const GeneralizedTwoStateVector& g, const Operator& op,
                   double orthogonality_tol = kOrthogonalityTol);

CertaintyReport element_of_reality(const TwoStateVector& tsv, const Observable& obs,
                                   double tol = kCertaintyTol, std::string label = {});
CertaintyReport element_of_reality(const GeneralizedTwoStateVector& g, const Observable& obs,
                                   double tol = kCertaintyTol, std::string label = {});

/// Certainty of A, B and AB. Throws NotMeasurableError when AB is not
/// Hermitian; non-commuting products are never symmetrized.
ProductRuleReport product_rule_report(const TwoStateVector& tsv, const Observable& a,
                                      const Observable& b, double tol = kCertaintyTol);

/// Prob(a, b) = |<a|K|b>|^2 / sum_{a',b'} |<a'|K|b'>|^2 for rank-1 projectors
/// |a><a| on the forward space and |b><b| on the backward space.
double two_time_joint(const TwoTimeKernel& k, const Operator& proj_a, const Operator& proj_b);

/// Probability that both particles show the same eigenvalue of obs. Needs a
/// non-degenerate obs on a kernel with equal forward and backward dims.
double two_time_same_outcome(const TwoTimeKernel& k, const Observable& obs);

}  // namespace tsvlab
