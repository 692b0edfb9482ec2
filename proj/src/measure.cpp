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

#include "tsvlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "tsvlab/errors.hpp"

namespace tsvlab {
namespace {

constexpr double kBasisResidualTol = 1e-8;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Index of the bucket a uniform draw falls into. The last non-empty bucket
// absorbs rounding in the cumulative sum.
std::size_t sample_index(std::span<const double> probabilities, double u) {
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    last = i;
    acc += probabilities[i];
    if (u < acc) return i;
  }
  return last;
}

std::vector<double> born_probabilities(const Vector& state, const Observable& obs) {
  std::vector<double> p;
  for (const auto& e : obs.spectrum()) p.push_back((e.projector.matrix() * state).squaredNorm());
  return p;
}

double binomial_standard_error(std::uint64_t count, std::uint64_t n) {
  if (n == 0) return 0.0;
  const double nd = static_cast<double>(n);
  double p = static_cast<double>(count) / nd;
  if (count == 0 || count == n) p = (static_cast<double>(count) + 1.0) / (nd + 2.0);
  return std::sqrt(p * (1.0 - p) / nd);
}

struct WorkerTally {
  std::uint64_t kept = 0;
  std::vector<std::uint64_t> counts;
};

}  // namespace

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t worker_stream_seed(std::uint64_t seed, unsigned worker) {
  return splitmix64(seed + (static_cast<std::uint64_t>(worker) + 1) * 0x9E3779B97F4A7C15ULL);
}

MeasurementRecord ideal_measure(const Ket& state, const Observable& obs, Rng& rng) {
  if (state.dim() != obs.dim()) throw DimensionError("state and observable dimensions differ");
  const auto p = born_probabilities(state.amplitudes(), obs);
  const std::size_t n = sample_index(p, uniform01(rng));
  const auto& space = obs.spectrum()[n];
  return {space.value, n, Ket(space.projector.matrix() * state.amplitudes()), p[n]};
}

std::vector<Vector> complete_basis(const Bra& post) {
  const auto d = static_cast<Eigen::Index>(post.dim());
  std::vector<Vector> basis{post.amplitudes()};
  for (Eigen::Index i = 0; i < d && static_cast<Eigen::Index>(basis.size()) < d; ++i) {
    Vector v = Vector::Unit(d, i);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm > kBasisResidualTol) basis.push_back(v / norm);
  }
  return basis;
}

MonteCarloReport monte_carlo_abl(const Ket& pre, const Bra& post, const Observable& obs,
                                 std::uint64_t n_samples, std::uint64_t seed, unsigned workers) {
  if (n_samples == 0) throw Error("monte carlo needs at least one sample");
  if (workers == 0) throw Error("monte carlo needs at least one worker");
  if (pre.dim() != obs.dim() || post.dim() != obs.dim()) {
    throw DimensionError("selection and observable dimensions differ");
  }

  // The intermediate collapse and the final-basis statistics depend only on
  // the outcome index, so they are tabulated once.
  const auto first = born_probabilities(pre.amplitudes(), obs);
  const auto basis = complete_basis(post);
  std::vector<std::vector<double>> final_probs;
  for (std::size_t n = 0; n < obs.num_outcomes(); ++n) {
    std::vector<double> q(basis.size(), 0.0);
    if (first[n] > 0.0) {
      const Vector collapsed =
          obs.spectrum()[n].projector.matrix() * pre.amplitudes() / std::sqrt(first[n]);
      for (std::size_t k = 0; k < basis.size(); ++k) q[k] = std::norm(basis[k].dot(collapsed));
    }
    final_probs.push_back(std::move(q));
  }

  std::vector<WorkerTally> tallies(workers);
  auto run_block = [&](unsigned w) {
    const std::uint64_t begin = n_samples * w / workers;
    const std::uint64_t end = n_samples * (w + 1) / workers;
    Rng rng(worker_stream_seed(seed, w));
    WorkerTally& t = tallies[w];
    t.counts.assign(obs.num_outcomes(), 0);
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      const std::size_t n = sample_index(first, uniform01(rng));
      const std::size_t k = sample_index(final_probs[n], uniform01(rng));
      if (k != 0) continue;  // post-selection failed
      ++t.kept;
      ++t.counts[n];
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }

  MonteCarloReport report;
  report.seed = seed;
  report.workers = workers;
  report.samples_total = n_samples;
  std::vector<std::uint64_t> counts(obs.num_outcomes(), 0);
  for (const auto& t : tallies) {
    report.samples_postselected += t.kept;
    for (std::size_t n = 0; n < counts.size(); ++n) counts[n] += t.counts[n];
  }
  const std::uint64_t kept = report.samples_postselected;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    const double freq = kept > 0 ? static_cast<double>(counts[n]) / static_cast<double>(kept) : 0.0;
    report.outcomes.push_back(
        {obs.spectrum()[n].value, counts[n], freq, binomial_standard_error(counts[n], kept)});
  }
  return report;
}

Distribution exact_conditional_oracle(const Ket& pre, const Bra& post, const Observable& obs) {
  if (pre.dim() != obs.dim() || post.dim() != obs.dim()) {
    throw DimensionError("selection and observable dimensions differ");
  }
  std::vector<double> values;
  std::vector<double> joint;
  for (const auto& e : obs.spectrum()) {
    values.push_back(e.value);
    const Vector projected = e.projector.matrix() * pre.amplitudes();
    const double p_outcome = projected.squaredNorm();
    if (p_outcome == 0.0) {
      joint.push_back(0.0);
      continue;
    }
    const Vector collapsed = projected / std::sqrt(p_outcome);
    double overlap2 = 0.0;
    {
      Complex amp{0.0, 0.0};
      for (Eigen::Index i = 0; i < collapsed.size(); ++i) amp += std::conj(post[i]) * collapsed(i);
      overlap2 = std::norm(amp);
    }
    joint.push_back(p_outcome * overlap2);
  }
  try {
    return Distribution::from_weights(values, joint);
  } catch (const NullEnsembleError&) {
    throw NullEnsembleError("post-selection never succeeds after measuring this observable");
  }
}

PointerConfig PointerConfig::auto_sized(double coupling, double sigma, const Observable& obs) {
  double max_abs = 0.0;
  for (const auto& e : obs.spectrum()) max_abs = std::max(max_abs, std::abs(e.value));
  PointerConfig cfg{coupling, sigma, 10.0 * (sigma + coupling * max_abs), kMinPoints + 1};
  if (sigma > 0.0 && std::isfinite(cfg.half_range)) {
    const double needed = std::ceil(2.0 * cfg.half_range / (0.25 * sigma)) + 1.0;
    if (needed > static_cast<double>(cfg.points)) cfg.points = static_cast<std::size_t>(needed) | 1U;
  }
  return cfg;
}

void PointerConfig::validate(const Observable& obs) const {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw ConfigError("coupling must be positive");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma must be positive");
  if (points < kMinPoints) throw ConfigError("pointer grid needs at least 4096 points");
  double max_abs = 0.0;
  for (const auto& e : obs.spectrum()) max_abs = std::max(max_abs, std::abs(e.value));
  if (!(half_range >= 10.0 * (sigma + coupling * max_abs))) {
    throw ConfigError("pointer grid half-range is smaller than 10 (sigma + g max|o|)");
  }
}

PointerResult weak_measure_pointer(const TwoStateVector& tsv, const Observable& obs,
                                   const PointerConfig& cfg) {
  cfg.validate(obs);
  if (tsv.dim() != obs.dim()) throw DimensionError("two-state vector and observable dimensions differ");

  std::vector<Complex> amps;
  for (const auto& e : obs.spectrum()) amps.push_back(sandwich(tsv.backward(), e.projector, tsv.forward()));

  const double norm = std::pow(std::numbers::pi * cfg.sigma * cfg.sigma, -0.25);
  const double inv_two_var = 1.0 / (2.0 * cfg.sigma * cfg.sigma);
  const double step = 2.0 * cfg.half_range / static_cast<double>(cfg.points - 1);

  PointerResult r;
  r.positions.resize(cfg.points);
  r.density.resize(cfg.points);
  for (std::size_t i = 0; i < cfg.points; ++i) {
    const double q = -cfg.half_range + step * static_cast<double>(i);
    Complex phi{0.0, 0.0};
    for (std::size_t n = 0; n < amps.size(); ++n) {
      const double d = q - cfg.coupling * obs.spectrum()[n].value;
      phi += amps[n] * (norm * std::exp(-d * d * inv_two_var));
    }
    r.positions[i] = q;
    r.density[i] = std::norm(phi);
  }

  const double mass = trapezoid(r.positions, r.density);
  if (!(mass > kNullWeightTol)) throw NullEnsembleError("post-selection never succeeds with this pointer");
  r.postselection_rate = std::clamp(mass, 0.0, 1.0);
  for (auto& v : r.density) v /= mass;
  std::vector<double> first_moment(cfg.points);
  for (std::size_t i = 0; i < cfg.points; ++i) first_moment[i] = r.positions[i] * r.density[i];
  r.mean_shift = trapezoid(r.positions, first_moment);
  return r;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("trapezoid needs matching abscissae and values");
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

std::vector<double> bump_masses(const PointerResult& result, const Observable& obs, double coupling) {
  const std::size_t m = obs.num_outcomes();
  std::vector<double> edges;  // m - 1 interior cut points
  for (std::size_t n = 0; n + 1 < m; ++n) {
    edges.push_back(0.5 * coupling * (obs.spectrum()[n].value + obs.spectrum()[n + 1].value));
  }
  std::vector<double> masses(m, 0.0);
  const auto& x = result.positions;
  const auto& y = result.density;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double mid = 0.5 * (x[i] + x[i - 1]);
    const auto bucket = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), mid) - edges.begin());
    masses[bucket] += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return masses;
}

void write_density_csv(const PointerResult& result, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "position,density\n";
  for (std::size_t i = 0; i < result.positions.size(); ++i) {
    out << result.positions[i] << ',' << result.density[i] << '\n';
  }
  out.precision(old_precision);
}

ConsistencyReport strong_weak_consistency(const TwoStateVector& tsv, const Observable& obs, double tol) {
  ConsistencyReport r;
  r.strong = element_of_reality(tsv, obs, tol);
  r.weak = weak_value(tsv, obs.op());
  r.dichotomic = obs.is_dichotomic();
  if (r.strong.certain) r.strong_implies_weak = std::abs(r.weak - Complex{*r.strong.value, 0.0}) <= tol;
  if (r.dichotomic) {
    const Distribution dist = abl_probabilities(tsv, obs);
    for (const auto& e : obs.spectrum()) {
      if (std::abs(r.weak - Complex{e.value, 0.0}) <= tol) {
        r.weak_implies_strong = r.weak_implies_strong && dist.probability_of(e.value) >= 1.0 - tol;
      }
    }
  }
  return r;
}

double TwoTimeSampleReport::same_frequency() const {
  return samples_accepted > 0 ? static_cast<double>(same_count) / static_cast<double>(samples_accepted) : 0.0;
}

double TwoTimeSampleReport::standard_error() const {
  return binomial_standard_error(same_count, samples_accepted);
}

TwoTimeSampleReport monte_carlo_two_time(const TwoTimeKernel& k, const Observable& obs_a,
                                         const Observable& obs_b, std::uint64_t n_samples,
                                         std::uint64_t seed) {
  if (obs_a.dim() != k.forward_dim() || obs_b.dim() != k.backward_dim()) {
    throw DimensionError("observable dimensions do not match the kernel");
  }
  // Basis states |b> of obs_b, each eigenspace contributing its own vectors.
  std::vector<std::pair<double, Vector>> b_states;
  for (const auto& e : obs_b.spectrum()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(e.projector.matrix());
    const Matrix& v = solver.eigenvectors();
    for (std::size_t j = 0; j < e.rank; ++j) {
      b_states.emplace_back(e.value, v.col(v.cols() - 1 - static_cast<Eigen::Index>(j)));
    }
  }
  const Eigen::JacobiSVD<Matrix> svd(k.matrix());
  const double s_max2 = svd.singularValues()(0) * svd.singularValues()(0);

  struct Branch {
    double value;
    double accept;
    std::vector<double> a_probs;
  };
  std::vector<Branch> branches;
  for (const auto& [value, b] : b_states) {
    const Vector filtered = k.matrix() * b;
    const double w = filtered.squaredNorm();
    Branch br{value, w / s_max2, {}};
    if (w > 0.0) br.a_probs = born_probabilities(filtered / std::sqrt(w), obs_a);
    branches.push_back(std::move(br));
  }

  TwoTimeSampleReport r;
  r.samples_total = n_samples;
  Rng rng(worker_stream_seed(seed, 0));
  for (std::uint64_t trial = 0; trial < n_samples; ++trial) {
    const auto pick = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(branches.size()));
    const Branch& br = branches[std::min(pick, branches.size() - 1)];
    if (!(uniform01(rng) < br.accept)) continue;
    ++r.samples_accepted;
    const std::size_t a = sample_index(br.a_probs, uniform01(rng));
    if (std::abs(obs_a.spectrum()[a].value - br.value) <= kDegeneracyTol) ++r.same_count;
  }
  return r;
}

}  // namespace tsvlab
