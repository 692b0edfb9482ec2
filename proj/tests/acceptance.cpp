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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "support.hpp"
#include "tsvlab/errors.hpp"
#include "tsvlab/measure.hpp"
#include "tsvlab/scenarios.hpp"

using namespace tsvlab;
using tsvlab::testing::Gen;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<Verdict()> body;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Operator basis_projector(std::size_t dim, std::size_t i) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  return Operator(m);
}

Operator diagonal(std::vector<double> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return Operator(m);
}

TwoStateVector spin_box() { return {make_bra({1, 1, -1, 0}), make_ket({1, 1, 1, 0})}; }

// Random observable, sometimes with repeated eigenvalues.
Operator random_observable(Gen& gen, std::size_t d, int trial) {
  if (trial % 4 != 0) return Operator(gen.hermitian(d));
  std::vector<double> values(d);
  for (auto& v : values) v = static_cast<double>(gen.integer(-2, 2));
  return gen.with_spectrum(values);
}

double max_prob_diff(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].value - b[i].value) > 1e-9) return INFINITY;
    worst = std::max(worst, std::abs(a[i].probability - b[i].probability));
  }
  return worst;
}

template <class State>
Complex projector_weak_sum(const State& s, const Operator& op) {
  const Observable obs = spectral_decompose(op);
  Complex sum{0.0, 0.0};
  for (const auto& e : obs.spectrum()) sum += weak_value(s, e.projector);
  return sum;
}

Verdict ac1() {
  Gen gen(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = static_cast<std::size_t>(2 + trial % 5);
    const Ket pre = gen.ket(d);
    const Bra post = gen.bra(d);
    const Observable obs = spectral_decompose(random_observable(gen, d, trial));
    worst = std::max(worst, max_prob_diff(abl_probabilities(TwoStateVector(post, pre), obs),
                                          exact_conditional_oracle(pre, post, obs)));
  }
  return {worst <= 1e-12, "500 instances, dims 2-6, max |diff| = " + fmt("%.3g", worst)};
}

Verdict ac2() {
  const TwoStateVector box = spin_box();
  const Observable a_up = spectral_decompose(basis_projector(4, 0));
  const Observable a_down = spectral_decompose(basis_projector(4, 1));
  const auto r = product_rule_report(box, a_up, a_down);
  const auto certain_with = [](const CertaintyReport& c, double v) {
    return c.certain && c.value && *c.value == v && c.max_probability >= 1.0 - 1e-10;
  };
  const bool ok = certain_with(r.a, 1.0) && certain_with(r.b, 1.0) && certain_with(r.ab, 0.0) &&
                  r.product_rule_holds.has_value() && !*r.product_rule_holds;
  return {ok, "P_A_up = 1, P_A_down = 1, product = 0, product rule flagged as failing"};
}

Verdict ac3() {
  const Complex w = weak_value(spin_box(), basis_projector(4, 2));
  double worst = 0.0;
  int sums = 0;
  for (const auto name : scenario_names()) {
    const Scenario s = *make_scenario(name);
    for (const auto& o : s.observables) {
      if (const auto* tsv = std::get_if<TwoStateVector>(&s.state)) {
        worst = std::max(worst, std::abs(projector_weak_sum(*tsv, o.op) - 1.0));
        ++sums;
      } else if (const auto* g = std::get_if<GeneralizedTwoStateVector>(&s.state)) {
        worst = std::max(worst, std::abs(projector_weak_sum(*g, o.op) - 1.0));
        ++sums;
      }
    }
    for (const auto& f : s.fixtures) {
      worst = std::max(worst, std::abs(projector_weak_sum(TwoStateVector(f.post, f.pre), f.obs) - 1.0));
      ++sums;
    }
  }
  Gen gen(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = static_cast<std::size_t>(2 + trial % 5);
    const TwoStateVector tsv(gen.bra(d), gen.ket(d));
    worst = std::max(worst, std::abs(projector_weak_sum(tsv, random_observable(gen, d, trial)) - 1.0));
    ++sums;
  }
  const double w_err = std::abs(w - Complex{-1.0, 0.0});
  return {w_err <= 1e-12 && worst <= 1e-12,
          "(P_B_up)_w = " + format_complex(w) + ", " + std::to_string(sums) +
              " projector sums, max |sum - 1| = " + fmt("%.3g", worst)};
}

Verdict ac4() {
  Gen gen(1004);
  int violations = 0, certain = 0, tested = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = static_cast<std::size_t>(gen.integer(2, 6));
    const Observable obs = spectral_decompose(gen.dichotomic(d));
    Ket pre = gen.ket(d);
    Vector post = gen.vector(d);
    if (trial % 5 == 4) {
      // Pre-selection inside one eigenspace.
      const Vector v = obs.spectrum()[0].projector.matrix() * gen.vector(d);
      pre = Ket(v);
    } else if (trial % 5 != 0) {
      const Vector blocked = obs.spectrum()[static_cast<std::size_t>(trial % 2)].projector.matrix() * pre.amplitudes();
      post -= blocked.dot(post) / blocked.squaredNorm() * blocked;
    }
    const TwoStateVector tsv{Bra(post), pre};
    if (std::abs(tsv.overlap()) <= kOrthogonalityTol) continue;
    const auto r = strong_weak_consistency(tsv, obs, 1e-10);
    ++tested;
    if (!r.dichotomic || !r.passed()) ++violations;
    if (r.strong.certain) ++certain;
  }
  return {violations == 0 && tested >= 990, std::to_string(tested) + " cases (" + std::to_string(certain) +
                                                " with a certain outcome), " + std::to_string(violations) +
                                                " violations"};
}

struct McCase {
  std::string label;
  Ket pre;
  Bra post;
  Operator obs;
};

Verdict ac5() {
  std::vector<McCase> cases;
  for (const auto name : scenario_names()) {
    const Scenario s = *make_scenario(name);
    for (const auto& f : s.fixtures) cases.push_back({std::string(name) + ": " + f.label, f.pre, f.post, f.obs});
  }
  const std::size_t scenario_cases = cases.size();
  Gen gen(1005);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(2 + trial % 5);
    cases.push_back({"random " + std::to_string(trial), gen.ket(d), gen.bra(d), random_observable(gen, d, trial)});
  }

  const std::uint64_t n = 100000;
  double worst_z = 0.0;
  bool reproducible = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const Observable obs = spectral_decompose(c.obs);
    const unsigned workers = i % 2 == 0 ? 1U : 4U;
    const auto abl = abl_probabilities(TwoStateVector(c.post, c.pre), obs);
    const auto mc = monte_carlo_abl(c.pre, c.post, obs, n, kDefaultSeed + i, workers);
    if (mc.samples_postselected == 0) return {false, c.label + ": nothing survived post-selection"};
    for (std::size_t k = 0; k < mc.outcomes.size(); ++k) {
      worst_z = std::max(worst_z, std::abs(mc.outcomes[k].frequency - abl[k].probability) / mc.outcomes[k].standard_error);
    }
    reproducible = reproducible && mc == monte_carlo_abl(c.pre, c.post, obs, n, kDefaultSeed + i, workers);
  }

  // Correlated pair: sample both particles along several directions.
  const TwoTimeKernel pair(Matrix::Identity(2, 2) / std::sqrt(2.0));
  int pair_cases = 0;
  for (const auto& dir : {std::array{0.0, 0.0, 1.0}, std::array{1.0, 0.0, 0.0}, std::array{0.6, 0.0, 0.8},
                          std::array{0.0, 0.6, 0.8}}) {
    const Observable obs = spectral_decompose(pauli::along(dir[0], dir[1], dir[2]));
    const auto a = monte_carlo_two_time(pair, obs, obs, n, kDefaultSeed);
    const auto b = monte_carlo_two_time(pair, obs, obs, n, kDefaultSeed);
    const double p = two_time_same_outcome(pair, obs);
    worst_z = std::max(worst_z, std::abs(a.same_frequency() - p) / a.standard_error());
    reproducible = reproducible && a.same_count == b.same_count && a.samples_accepted == b.samples_accepted;
    ++pair_cases;
  }
  return {worst_z <= 5.0 && reproducible,
          std::to_string(scenario_cases) + " scenario fixtures + " + std::to_string(pair_cases) +
              " correlated-pair directions + 20 random, n = 1e5, max |z| = " + fmt("%.2f", worst_z) +
              (reproducible ? ", reports reproducible" : ", reports NOT reproducible")};
}

Verdict ac6() {
  const TwoStateVector box = spin_box();
  const Observable p_b_up = spectral_decompose(basis_projector(4, 2));
  const auto deviation = [&](double g) {
    const auto r = weak_measure_pointer(box, p_b_up, PointerConfig::auto_sized(g, 1.0, p_b_up));
    return std::abs(r.mean_shift / g + 1.0);
  };
  const double small = deviation(1e-3);
  const double large = deviation(2e-3);

  double worst_mass = 0.0;
  const auto strong = [&](const TwoStateVector& tsv, const Operator& op) {
    const Observable obs = spectral_decompose(op);
    const double g = 1000.0;
    const auto r = weak_measure_pointer(tsv, obs, PointerConfig::auto_sized(g, 1.0, obs));
    const auto masses = bump_masses(r, obs, g);
    const auto abl = abl_probabilities(tsv, obs);
    for (std::size_t i = 0; i < masses.size(); ++i) worst_mass = std::max(worst_mass, std::abs(masses[i] - abl[i].probability));
  };
  strong(box, diagonal({0, 1, 2, 3}));
  strong(TwoStateVector(make_bra({1, 1, -1}), make_ket({1, 1, 1})), diagonal({1, 2, 3}));

  return {small <= 0.5 * large && worst_mass <= 1e-6,
          "deviation " + fmt("%.3g", small) + " at g = 1e-3 vs " + fmt("%.3g", large) +
              " at g = 2e-3 (ratio " + fmt("%.3f", small / large) + "), strong-regime max mass error " +
              fmt("%.2g", worst_mass)};
}

Verdict ac7() {
  Gen gen(1007);
  double worst_p = 0.0, worst_w = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ns = trial % 2 == 0 ? 2 : 3;
    const std::size_t na = 2;
    const Ket pre = gen.ket(ns * na);
    const Bra post = gen.bra(ns * na);
    const auto g = gtsv_from_ancilla(pre, post, ns, na);
    const TwoStateVector joint(post, pre);
    const Operator sys = random_observable(gen, ns, trial);
    const Operator lifted = tensor(sys, Operator::identity(na));
    worst_p = std::max(worst_p, max_prob_diff(abl_probabilities(g, spectral_decompose(sys)),
                                              abl_probabilities(joint, spectral_decompose(lifted))));
    worst_w = std::max(worst_w, std::abs(weak_value(g, sys) - weak_value(joint, lifted)));
  }
  return {worst_p <= 1e-12 && worst_w <= 1e-12, "200 pairs (2x2, 3x2), max ABL diff " + fmt("%.3g", worst_p) +
                                                    ", max weak-value diff " + fmt("%.3g", worst_w)};
}

Verdict ac8() {
  const MeanKingSolution sol = mean_king_solution();
  const std::array<Operator, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  double lowest = 1.0;
  bool ok = true;
  std::ostringstream table;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto g = gtsv_from_ancilla(sol.pre, sol.post_basis[k], 2, 2);
    table << "\n      outcome " << k << ":";
    for (std::size_t c = 0; c < 3; ++c) {
      const auto rep = element_of_reality(g, spectral_decompose(sigma[c]), 1e-10);
      lowest = std::min(lowest, rep.max_probability);
      ok = ok && rep.certain && rep.value && std::abs(*rep.value - sol.values[k][c]) <= 1e-9;
      table << ' ' << "xyz"[c] << '=' << (sol.values[k][c] > 0 ? "+1" : "-1");
    }
  }
  return {ok && lowest >= 1.0 - 1e-10,
          "lowest certainty " + fmt("%.15f", lowest) + "; value table:" + table.str()};
}

Verdict ac9() {
  Gen gen(1009);
  const TwoTimeKernel pair(Matrix::Identity(2, 2) / std::sqrt(2.0));
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1.0;
  c(1, 1) = 0.5;
  const TwoTimeKernel control(c);
  double worst = 0.0, control_worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector3d n(gen.normal(), gen.normal(), gen.normal());
    n.normalize();
    const Observable obs = spectral_decompose(pauli::along(n[0], n[1], n[2]));
    worst = std::max(worst, std::abs(two_time_same_outcome(pair, obs) - 1.0));
    control_worst = std::max(control_worst, std::abs(two_time_same_outcome(control, obs) - 1.0));
  }
  return {worst <= 1e-12 && control_worst > 1e-12,
          "100 directions, max |P(same) - 1| = " + fmt("%.3g", worst) + "; control kernel deviates by up to " +
              fmt("%.3g", control_worst)};
}

Verdict ac10() {
  Gen gen(1010);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(2 + trial % 5);
    const Vector psi = gen.vector(d);
    const Vector phi = gen.vector(d);
    const Observable obs = spectral_decompose(random_observable(gen, d, trial));
    const auto base = abl_probabilities(TwoStateVector(Bra(phi), Ket(psi)), obs);
    Distribution other = base;
    switch (trial % 3) {
      case 0:
        other = abl_probabilities(TwoStateVector(Bra(psi), Ket(phi)), obs);
        break;
      case 1: {
        const Complex phase = std::polar(1.0, gen.uniform(0.0, 2.0 * std::numbers::pi));
        const Complex phase2 = std::polar(1.0, gen.uniform(0.0, 2.0 * std::numbers::pi));
        other = abl_probabilities(TwoStateVector(Bra(phase2 * phi), Ket(phase * psi)), obs);
        break;
      }
      default: {
        const double s = std::exp(gen.uniform(-5.0, 5.0));
        const double s2 = std::exp(gen.uniform(-5.0, 5.0));
        other = abl_probabilities(TwoStateVector(Bra(s2 * phi), Ket(s * psi)), obs);
        break;
      }
    }
    worst = std::max(worst, max_prob_diff(base, other));
  }
  return {worst <= 1e-12, "100 exchanges + 100 phases + 100 rescalings, max |diff| = " + fmt("%.3g", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "ABL rule equals the two-step Born oracle", 5.0, ac1},
      {"AC2", "spin-box certainties and product-rule failure", 1.0, ac2},
      {"AC3", "weak values and projector sums", 0.0, ac3},
      {"AC4", "strong/weak consistency for dichotomic observables", 0.0, ac4},
      {"AC5", "Monte Carlo ensembles agree with ABL", 60.0, ac5},
      {"AC6", "pointer first-order law and strong-regime masses", 0.0, ac6},
      {"AC7", "generalized states agree with the joint system", 0.0, ac7},
      {"AC8", "mean-king values are dispersion-free", 0.0, ac8},
      {"AC9", "correlated pair gives identical outcomes", 0.0, ac9},
      {"AC10", "exchange, phase and rescaling invariance", 0.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
      v.passed = false;
      v.detail += "; over the time limit";
    }
    if (!v.passed) ++failures;
    std::printf("[%s] %-4s %s: %s (%.2f s%s)\n", v.passed ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), seconds,
                c.time_limit_s > 0.0 ? (" of " + fmt("%.0f", c.time_limit_s)).c_str() : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
