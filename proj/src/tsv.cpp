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

#include "tsvlab/tsv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "tsvlab/errors.hpp"

namespace tsvlab {
namespace {

constexpr double kProjectorTol = 1e-9;

std::vector<double> eigenvalues(const Observable& obs) {
  std::vector<double> values;
  for (const auto& e : obs.spectrum()) values.push_back(e.value);
  return values;
}

// Unnormalized ABL weights |A_n|^2 from per-eigenspace amplitudes A_n.
template <typename AmplitudeFn>
Distribution abl_from_amplitudes(const Observable& obs, AmplitudeFn amplitude) {
  std::vector<double> weights;
  for (const auto& e : obs.spectrum()) weights.push_back(std::norm(amplitude(e.projector)));
  try {
    return Distribution::from_weights(eigenvalues(obs), weights);
  } catch (const NullEnsembleError&) {
    throw NullEnsembleError(
        "this pre/post-selection is incompatible with measuring this observable at this time");
  }
}

CertaintyReport certainty_from(const Distribution& dist, double tol, std::string label) {
  CertaintyReport r;
  r.label = std::move(label);
  const Outcome& best = dist.most_likely();
  r.max_probability = best.probability;
  r.certain = best.probability >= 1.0 - tol;
  if (r.certain) r.value = best.value;
  return r;
}

bool is_rank_one_projector(const Operator& p) {
  const Matrix& m = p.matrix();
  if (!p.is_hermitian()) return false;
  if ((m * m - m).cwiseAbs().maxCoeff() > kProjectorTol) return false;
  return std::abs(m.trace() - Complex{1.0, 0.0}) <= kProjectorTol;
}

}  // namespace

TwoStateVector::TwoStateVector(Bra backward, Ket forward)
    : backward_(std::move(backward)), forward_(std::move(forward)) {
  overlap_ = pair(backward_, forward_);  // throws DimensionError on mismatch
}

GeneralizedTwoStateVector::GeneralizedTwoStateVector(std::vector<GtsvTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw DimensionError("generalized two-state vector needs a term");
  const std::size_t d = terms_.front().forward.dim();
  bool any_nonzero = false;
  for (const auto& t : terms_) {
    if (t.forward.dim() != d || t.backward.dim() != d) {
      throw DimensionError("generalized two-state vector terms differ in dimension");
    }
    any_nonzero = any_nonzero || t.alpha != Complex{0.0, 0.0};
  }
  if (!any_nonzero) throw NullEnsembleError("every alpha of the generalized two-state vector is zero");
}

GeneralizedTwoStateVector::GeneralizedTwoStateVector(const TwoStateVector& tsv)
    : terms_{GtsvTerm{Complex{1.0, 0.0}, tsv.backward(), tsv.forward()}} {}

Complex GeneralizedTwoStateVector::amplitude(const Operator& op) const {
  Complex sum{0.0, 0.0};
  for (const auto& t : terms_) sum += t.alpha * sandwich(t.backward, op, t.forward);
  return sum;
}

Complex GeneralizedTwoStateVector::overlap() const {
  Complex sum{0.0, 0.0};
  for (const auto& t : terms_) sum += t.alpha * pair(t.backward, t.forward);
  return sum;
}

TwoTimeKernel::TwoTimeKernel(Matrix kernel) : k_(std::move(kernel)) {
  if (k_.size() == 0) throw DimensionError("two-time kernel must be non-empty");
  if (k_.squaredNorm() == 0.0) throw ZeroStateError("two-time kernel is zero");
}

Distribution Distribution::from_weights(std::span<const double> values,
                                        std::span<const double> weights, double null_tol) {
  if (values.size() != weights.size() || values.empty()) {
    throw DimensionError("distribution needs one weight per outcome");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > null_tol)) throw NullEnsembleError("all outcome weights vanish");
  Distribution d;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] < 0.0) throw Error("negative outcome weight");
    d.entries_.push_back({values[i], weights[i] / total});
  }
  std::sort(d.entries_.begin(), d.entries_.end(),
            [](const Outcome& l, const Outcome& r) { return l.value < r.value; });
  return d;
}

double Distribution::probability_of(double value, double tol) const {
  for (const auto& e : entries_) {
    if (std::abs(e.value - value) <= tol) return e.probability;
  }
  return 0.0;
}

const Outcome& Distribution::most_likely() const {
  return *std::max_element(entries_.begin(), entries_.end(), [](const Outcome& l, const Outcome& r) {
    return l.probability < r.probability;
  });
}

Distribution abl_probabilities(const TwoStateVector& tsv, const Observable& obs) {
  if (tsv.dim() != obs.dim()) throw DimensionError("two-state vector and observable dimensions differ");
  return abl_from_amplitudes(obs, [&](const Operator& p) {
    return sandwich(tsv.backward(), p, tsv.forward());
  });
}

Distribution abl_probabilities(const GeneralizedTwoStateVector& g, const Observable& obs) {
  if (g.dim() != obs.dim()) throw DimensionError("two-state vector and observable dimensions differ");
  return abl_from_amplitudes(obs, [&](const Operator& p) { return g.amplitude(p); });
}

Distribution abl_at_time(const Ket& pre, const Bra& post, const HamiltonianSchedule& schedule,
                         double t, const Observable& obs) {
  const double t1 = schedule.start_time();
  const double t2 = schedule.end_time();
  if (!(t >= t1 && t <= t2)) throw TimeWindowError("measurement time lies outside [t1, t2]");
  const Ket psi = evolve_forward(pre, schedule.window(t1, t));
  const Bra phi = evolve_backward(post, schedule.window(t, t2));
  return abl_probabilities(TwoStateVector(phi, psi), obs);
}

GeneralizedTwoStateVector gtsv_from_ancilla(const Ket& joint_pre, const Bra& joint_post,
                                            std::size_t system_dim, std::size_t ancilla_dim) {
  if (system_dim == 0 || ancilla_dim == 0 || joint_pre.dim() != system_dim * ancilla_dim ||
      joint_post.dim() != joint_pre.dim()) {
    throw DimensionError("joint states do not factor as system x ancilla");
  }
  const auto ns = static_cast<Eigen::Index>(system_dim);
  const auto na = static_cast<Eigen::Index>(ancilla_dim);
  std::vector<GtsvTerm> terms;
  for (Eigen::Index i = 0; i < na; ++i) {
    Vector psi(ns), phi(ns);
    for (Eigen::Index s = 0; s < ns; ++s) {
      psi(s) = joint_pre.amplitudes()(s * na + i);
      phi(s) = joint_post.amplitudes()(s * na + i);
    }
    const double alpha = psi.norm() * phi.norm();
    if (alpha <= kNullWeightTol) continue;
    terms.push_back({Complex{alpha, 0.0}, Bra(std::move(phi)), Ket(std::move(psi))});
  }
  if (terms.empty()) throw NullEnsembleError("pre- and post-selection share no ancilla component");
  return GeneralizedTwoStateVector(std::move(terms));
}

Complex weak_value(const TwoStateVector& tsv, const Operator& op, double orthogonality_tol) {
  if (std::abs(tsv.overlap()) <= orthogonality_tol) {
    throw OrthogonalSelectionError("pre- and post-selected states are orthogonal");
  }
  return sandwich(tsv.backward(), op, tsv.forward()) / tsv.overlap();
}

Complex weak_value(const GeneralizedTwoStateVector& g, const Operator& op, double orthogonality_tol) {
  if (op.dim() != g.dim()) throw DimensionError("operator and two-state vector dimensions differ");
  const Complex overlap = g.overlap();
  if (std::abs(overlap) <= orthogonality_tol) {
    throw OrthogonalSelectionError("generalized two-state vector has vanishing overlap");
  }
  return g.amplitude(op) / overlap;
}

CertaintyReport element_of_reality(const TwoStateVector& tsv, const Observable& obs, double tol,
                                   std::string label) {
  return certainty_from(abl_probabilities(tsv, obs), tol, std::move(label));
}

CertaintyReport element_of_reality(const GeneralizedTwoStateVector& g, const Observable& obs,
                                   double tol, std::string label) {
  return certainty_from(abl_probabilities(g, obs), tol, std::move(label));
}

ProductRuleReport product_rule_report(const TwoStateVector& tsv, const Observable& a,
                                      const Observable& b, double tol) {
  const Operator product = a.op() * b.op();
  if (!product.is_hermitian()) {
    throw NotMeasurableError("product of the observables is not Hermitian");
  }
  ProductRuleReport r;
  r.a = element_of_reality(tsv, a, tol, "A");
  r.b = element_of_reality(tsv, b, tol, "B");
  r.ab = element_of_reality(tsv, spectral_decompose(product), tol, "AB");
  if (r.a.certain && r.b.certain && r.ab.certain) {
    r.product_rule_holds = std::abs(*r.ab.value - *r.a.value * *r.b.value) <= kDegeneracyTol;
  }
  return r;
}

double two_time_joint(const TwoTimeKernel& k, const Operator& proj_a, const Operator& proj_b) {
  if (proj_a.dim() != k.forward_dim() || proj_b.dim() != k.backward_dim()) {
    throw DimensionError("projector dimensions do not match the kernel");
  }
  if (!is_rank_one_projector(proj_a) || !is_rank_one_projector(proj_b)) {
    throw NotMeasurableError("two-time outcomes must be rank-1 projectors");
  }
  // Summing |<a'|K|b'>|^2 over any orthonormal bases gives the Frobenius norm.
  const double total = k.matrix().squaredNorm();
  if (!(total > kNullWeightTol)) throw NullEnsembleError("two-time kernel has no weight");
  // tr(P_a K P_b K^dagger) = |<a|K|b>|^2.
  const Matrix& km = k.matrix();
  const double joint = (proj_a.matrix() * km * proj_b.matrix() * km.adjoint()).trace().real();
  return std::max(joint, 0.0) / total;
}

double two_time_same_outcome(const TwoTimeKernel& k, const Observable& obs) {
  double same = 0.0;
  for (const auto& e : obs.spectrum()) same += two_time_joint(k, e.projector, e.projector);
  return same;
}

}  // namespace tsvlab
