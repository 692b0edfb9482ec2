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

#include "tsvlab/scenarios.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <utility>

#include "tsvlab/errors.hpp"
#include "tsvlab/measure.hpp"

namespace tsvlab {
namespace {

constexpr std::uint64_t kMonteCarloSamples = 100000;
constexpr double kMonteCarloZ = 5.0;
constexpr double kValueTol = 1e-9;
constexpr double kWeakTol = 1e-12;
constexpr double kCorrelationTol = 1e-12;

Operator diagonal(std::initializer_list<double> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return Operator(std::move(m));
}

Operator basis_projector(std::size_t dim, std::size_t index) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return Operator(std::move(m));
}

std::string describe(const CertaintyReport& r) {
  if (r.certain) return "certain, value " + format_real(*r.value);
  return "not certain (max probability " + format_real(r.max_probability) + ")";
}

Check certainty_check(std::string description, std::string anchor, Provenance provenance,
                      GeneralizedTwoStateVector state, Operator op, double expected) {
  return {std::move(description), std::move(anchor), provenance,
          [state = std::move(state), op = std::move(op), expected] {
            const CertaintyReport r = element_of_reality(state, spectral_decompose(op));
            return CheckOutcome{"certain, value " + format_real(expected), describe(r),
                                r.certain && std::abs(*r.value - expected) <= kValueTol};
          }};
}

Check weak_value_check(std::string description, std::string anchor, Provenance provenance,
                       GeneralizedTwoStateVector state, Operator op, Complex expected) {
  return {std::move(description), std::move(anchor), provenance,
          [state = std::move(state), op = std::move(op), expected] {
            const Complex w = weak_value(state, op);
            return CheckOutcome{format_complex(expected), format_complex(w),
                                std::abs(w - expected) <= kWeakTol};
          }};
}

Check projector_weak_sum_check(std::string anchor, TwoStateVector tsv, Operator op) {
  return {"projector weak values of a complete eigenspace set sum to 1", std::move(anchor),
          Provenance::kTrivial, [tsv = std::move(tsv), op = std::move(op)] {
            Complex sum{0.0, 0.0};
            const Observable obs = spectral_decompose(op);
            for (const auto& e : obs.spectrum()) sum += weak_value(tsv, e.projector);
            return CheckOutcome{"1", format_complex(sum), std::abs(sum - 1.0) <= kWeakTol};
          }};
}

Check monte_carlo_check(const SelectionFixture& f, std::uint64_t seed) {
  return {"Monte Carlo ensemble (n = 1e5) for " + f.label + " matches ABL within 5 standard errors",
          "ABL rule as a conditional probability", Provenance::kDerived, [f, seed] {
            const Observable obs = spectral_decompose(f.obs);
            const Distribution abl = abl_probabilities(TwoStateVector(f.post, f.pre), obs);
            const MonteCarloReport mc = monte_carlo_abl(f.pre, f.post, obs, kMonteCarloSamples, seed);
            double worst = 0.0;
            std::ostringstream expected, actual;
            for (std::size_t n = 0; n < mc.outcomes.size(); ++n) {
              const auto& t = mc.outcomes[n];
              const double p = abl.probability_of(t.value);
              worst = std::max(worst, std::abs(t.frequency - p) / t.standard_error);
              expected << (n ? ", " : "") << format_real(t.value) << ": " << format_real(p);
              actual << (n ? ", " : "") << format_real(t.value) << ": " << format_real(t.frequency);
            }
            actual << " (max |z| " << format_real(worst) << ", kept " << mc.samples_postselected << ")";
            return CheckOutcome{expected.str(), actual.str(),
                                mc.samples_postselected > 0 && worst <= kMonteCarloZ};
          }};
}

// Box-Muller on the portable uniform draw, normalized to a unit vector.
std::array<double, 3> random_direction(Rng& rng) {
  std::array<double, 3> n{};
  double norm = 0.0;
  while (norm < 1e-6) {
    norm = 0.0;
    for (auto& c : n) {
      const double u1 = 1.0 - uniform01(rng);
      const double u2 = uniform01(rng);
      c = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      norm += c * c;
    }
    norm = std::sqrt(norm);
  }
  for (auto& c : n) c /= norm;
  return n;
}

Observable spin_along(const std::array<double, 3>& n) {
  return spectral_decompose(pauli::along(n[0], n[1], n[2]));
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kPublished: return "published";
    case Provenance::kDerived: return "derived";
    case Provenance::kTrivial: return "trivial";
  }
  return "unknown";
}

std::string format_real(double x) {
  if (std::abs(x) < 5e-13) return "0";
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string format_complex(Complex z) {
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  return format_real(z.real()) + (im < 0 ? " - " : " + ") + format_real(std::abs(im)) + "i";
}

bool Report::passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

Scenario scenario_spin_box() {
  // Basis index = 2 * box + spin with box A = 0, B = 1 and spin up = 0, down = 1.
  const Ket pre = make_ket({1, 1, 1, 0});
  const Bra post = make_bra({1, 1, -1, 0});
  const TwoStateVector tsv(post, pre);
  const Operator p_a_up = basis_projector(4, 0);
  const Operator p_a_down = basis_projector(4, 1);
  const Operator p_b_up = basis_projector(4, 2);
  const Operator p_b_down = basis_projector(4, 3);
  const Operator product = p_a_up * p_a_down;
  const Operator cell = diagonal({0, 1, 2, 3});

  Scenario s{"spin-box",
             "spin-1/2 particle in two boxes A, B with pre (|A,up> + |A,down> + |B,up>)/sqrt3 "
             "and post (<A,up| + <A,down| - <B,up|)/sqrt3",
             {2, 2},
             {"A,up", "A,down", "B,up", "B,down"},
             tsv,
             {{"P_A_up", p_a_up},
              {"P_A_down", p_a_down},
              {"P_B_up", p_b_up},
              {"P_B_down", p_b_down},
              {"P_A_up_P_A_down", product},
              {"cell", cell},
              {"identity", Operator::identity(4)}},
             {{"P_A_up", pre, post, p_a_up},
              {"P_A_down", pre, post, p_a_down},
              {"P_B_up", pre, post, p_b_up},
              {"cell", pre, post, cell}},
             {}};

  auto& c = s.checks;
  c.push_back(certainty_check("P_A_up is an element of reality with value 1", "spin-box elements of reality",
                              Provenance::kPublished, tsv, p_a_up, 1.0));
  c.push_back(certainty_check("P_A_down is an element of reality with value 1",
                              "spin-box elements of reality", Provenance::kPublished, tsv, p_a_down, 1.0));
  c.push_back(certainty_check("product P_A_up P_A_down is certain with value 0", "failure of the product rule",
                              Provenance::kPublished, tsv, product, 0.0));
  c.push_back({"product rule fails: value(AB) != value(A) value(B)", "failure of the product rule",
               Provenance::kPublished, [tsv, p_a_up, p_a_down] {
                 const auto r = product_rule_report(tsv, spectral_decompose(p_a_up), spectral_decompose(p_a_down));
                 const std::string actual = "A " + describe(r.a) + "; B " + describe(r.b) + "; AB " + describe(r.ab) +
                                            (r.product_rule_holds ? (*r.product_rule_holds ? "; holds" : "; fails")
                                                                  : "; undetermined");
                 return CheckOutcome{"A certain 1, B certain 1, AB certain 0; fails", actual,
                                     r.product_rule_holds.has_value() && !*r.product_rule_holds};
               }});
  c.push_back(weak_value_check("weak value of P_B_up is -1, outside the eigenvalue range {0, 1}",
                               "weak value", Provenance::kDerived, tsv, p_b_up, Complex{-1.0, 0.0}));
  c.push_back(projector_weak_sum_check("weak value", tsv, cell));
  c.push_back({"strong certainty of P_A_up agrees with its weak value", "strong and weak measurements",
               Provenance::kDerived, [tsv, p_a_up] {
                 const auto r = strong_weak_consistency(tsv, spectral_decompose(p_a_up));
                 return CheckOutcome{"consistent, weak value 1",
                                     std::string(r.passed() ? "consistent" : "inconsistent") + ", weak value " +
                                         format_complex(r.weak),
                                     r.passed() && std::abs(r.weak - 1.0) <= kWeakTol};
               }});

  // The |B,down> direction carries no amplitude; dropping it must not change anything.
  const TwoStateVector support(make_bra({1, 1, -1}), make_ket({1, 1, 1}));
  c.push_back(certainty_check("3-dim support subspace: P_A_up certain with value 1",
                              "spin-box elements of reality", Provenance::kDerived, support,
                              basis_projector(3, 0), 1.0));
  c.push_back(certainty_check("3-dim support subspace: P_A_down certain with value 1",
                              "spin-box elements of reality", Provenance::kDerived, support,
                              basis_projector(3, 1), 1.0));
  c.push_back(weak_value_check("3-dim support subspace: weak value of P_B_up is -1", "weak value",
                               Provenance::kDerived, support, basis_projector(3, 2), Complex{-1.0, 0.0}));
  for (const auto& f : s.fixtures) c.push_back(monte_carlo_check(f, kDefaultSeed));
  return s;
}

Scenario scenario_three_box() {
  const Ket pre = make_ket({1, 1, 1});
  const Bra post = make_bra({1, 1, -1});
  const TwoStateVector tsv(post, pre);
  const Operator p_a = basis_projector(3, 0);
  const Operator p_b = basis_projector(3, 1);
  const Operator p_c = basis_projector(3, 2);
  const Operator box = diagonal({0, 1, 2});

  Scenario s{"three-box",
             "one particle in boxes A, B, C with pre (|A> + |B> + |C>)/sqrt3 and post (<A| + <B| - <C|)/sqrt3",
             {3},
             {"A", "B", "C"},
             tsv,
             {{"P_A", p_a}, {"P_B", p_b}, {"P_C", p_c}, {"box", box}, {"identity", Operator::identity(3)}},
             {{"P_A", pre, post, p_a}, {"P_B", pre, post, p_b}, {"P_C", pre, post, p_c}, {"box", pre, post, box}},
             {}};
  auto& c = s.checks;
  c.push_back(certainty_check("found with certainty in box A if searched there", "three-box paradox",
                              Provenance::kPublished, tsv, p_a, 1.0));
  c.push_back(certainty_check("found with certainty in box B if searched there instead", "three-box paradox",
                              Provenance::kPublished, tsv, p_b, 1.0));
  c.push_back(weak_value_check("weak value of P_C is -1", "weak value", Provenance::kDerived, tsv, p_c,
                               Complex{-1.0, 0.0}));
  c.push_back(projector_weak_sum_check("weak value", tsv, box));
  for (const auto& f : s.fixtures) c.push_back(monte_carlo_check(f, kDefaultSeed));
  return s;
}

Scenario scenario_spin_xz() {
  const Ket up_z = make_ket({1, 0});
  const Bra up_x = make_bra({1, 1});
  const TwoStateVector tsv(up_x, up_z);
  const Operator sx = pauli::x();
  const Operator sy = pauli::y();
  const Operator sz = pauli::z();

  Scenario s{"spin-xz",
             "spin-1/2 with sigma_z = +1 found at t1 and sigma_x = +1 found at t2",
             {2},
             {"up", "down"},
             tsv,
             {{"sigma_x", sx}, {"sigma_y", sy}, {"sigma_z", sz}, {"identity", Operator::identity(2)}},
             {{"sigma_z", up_z, up_x, sz}, {"sigma_x", up_z, up_x, sx}, {"sigma_y", up_z, up_x, sy}},
             {}};
  auto& c = s.checks;
  c.push_back(certainty_check("sigma_z is an element of reality with value +1", "noncommuting elements of reality",
                              Provenance::kPublished, tsv, sz, 1.0));
  c.push_back(certainty_check("sigma_x is an element of reality with value +1", "noncommuting elements of reality",
                              Provenance::kPublished, tsv, sx, 1.0));
  c.push_back({"two noncommuting observables are simultaneously dispersion-free",
               "noncommuting elements of reality", Provenance::kPublished, [tsv, sx, sz] {
                 const double commutator = (sz.matrix() * sx.matrix() - sx.matrix() * sz.matrix()).norm();
                 const auto rz = element_of_reality(tsv, spectral_decompose(sz));
                 const auto rx = element_of_reality(tsv, spectral_decompose(sx));
                 const bool violated = commutator > 1.0 && rz.certain && rx.certain;
                 return CheckOutcome{"|[sz, sx]| > 0 with both certain",
                                     "|[sz, sx]| = " + format_real(commutator) + ", sz " + describe(rz) + ", sx " +
                                         describe(rx),
                                     violated};
               }});
  c.push_back({"evolution with H = 0 between t1 and t2 leaves both certainties intact",
               "forward and backward evolution", Provenance::kTrivial, [up_z, up_x, sx, sz] {
                 const HamiltonianSchedule free(std::vector<Segment>{{1.0, Operator::zero(2)}});
                 const auto dz = abl_at_time(up_z, up_x, free, 0.5, spectral_decompose(sz));
                 const auto dx = abl_at_time(up_z, up_x, free, 0.5, spectral_decompose(sx));
                 const double pz = dz.probability_of(1.0);
                 const double px = dx.probability_of(1.0);
                 return CheckOutcome{"Prob(sz=+1) = 1, Prob(sx=+1) = 1",
                                     "Prob(sz=+1) = " + format_real(pz) + ", Prob(sx=+1) = " + format_real(px),
                                     pz >= 1.0 - kCertaintyTol && px >= 1.0 - kCertaintyTol};
               }});
  c.push_back(weak_value_check("weak value of sigma_y is i", "weak value", Provenance::kDerived, tsv, sy,
                               Complex{0.0, 1.0}));
  for (const auto& f : s.fixtures) c.push_back(monte_carlo_check(f, kDefaultSeed));
  return s;
}

MeanKingSolution mean_king_solution() {
  // With a maximally entangled pre-selection the joint amplitude of a spin
  // projector P is tr(X^dagger P) / sqrt2, where X_{s,a} are the components of
  // the post-selected state. X = (1 + s.sigma) / sqrt8 zeroes the amplitude of
  // the (1 - s_c sigma_c) / 2 eigenspace for every component c, and four sign
  // vectors with pairwise s.s' = -1 make the X orthonormal.
  constexpr std::array<std::array<int, 3>, 4> kSigns{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  const Ket pre = make_ket({1, 0, 0, 1});
  const std::array<Operator, 3> components{pauli::x(), pauli::y(), pauli::z()};

  auto post_for = [&](const std::array<int, 3>& s) {
    const Matrix x = (Matrix::Identity(2, 2) + s[0] * components[0].matrix() + s[1] * components[1].matrix() +
                      s[2] * components[2].matrix()) /
                     std::sqrt(8.0);
    Vector chi(4);
    for (Eigen::Index sys = 0; sys < 2; ++sys) {
      for (Eigen::Index anc = 0; anc < 2; ++anc) chi(sys * 2 + anc) = x(sys, anc);
    }
    return Bra(chi);
  };
  MeanKingSolution sol{pre,
                       {post_for(kSigns[0]), post_for(kSigns[1]), post_for(kSigns[2]), post_for(kSigns[3])},
                       {}};

  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      const double expected = j == k ? 1.0 : 0.0;
      if (std::abs(sol.post_basis[j].amplitudes().dot(sol.post_basis[k].amplitudes()) - expected) > 1e-12) {
        throw SearchFailedError("mean king post-selection states are not orthonormal");
      }
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const auto g = gtsv_from_ancilla(pre, sol.post_basis[k], 2, 2);
    for (std::size_t c = 0; c < 3; ++c) {
      const auto r = element_of_reality(g, spectral_decompose(components[c]));
      if (!r.certain) throw SearchFailedError("mean king post-selection leaves a spin component uncertain");
      sol.values[k][c] = *r.value > 0 ? 1 : -1;
    }
  }
  return sol;
}

Scenario scenario_mean_king() {
  const MeanKingSolution sol = mean_king_solution();
  const std::array<Operator, 3> components{pauli::x(), pauli::y(), pauli::z()};
  const std::array<const char*, 3> names{"sigma_x", "sigma_y", "sigma_z"};
  const auto id2 = Operator::identity(2);

  Scenario s{"mean-king",
             "spin-1/2 with an unmeasured spin-1/2 ancilla, pre (|00> + |11>)/sqrt2, four entangled "
             "post-selections each fixing sigma_x, sigma_y and sigma_z",
             {2},
             {"up", "down"},
             gtsv_from_ancilla(sol.pre, sol.post_basis[0], 2, 2),
             {{"sigma_x", components[0]}, {"sigma_y", components[1]}, {"sigma_z", components[2]}, {"identity", id2}},
             {},
             {}};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t c = 0; c < 3; ++c) {
      s.fixtures.push_back({std::string(names[c]) + " (x) 1, post outcome " + std::to_string(k), sol.pre,
                            sol.post_basis[k], tensor(components[c], id2)});
    }
  }

  auto& checks = s.checks;
  checks.push_back({"post-selection basis is orthonormal", "mean king problem", Provenance::kTrivial, [sol] {
                      double worst = 0.0;
                      for (std::size_t j = 0; j < 4; ++j) {
                        for (std::size_t k = 0; k < 4; ++k) {
                          const double d = j == k ? 1.0 : 0.0;
                          worst = std::max(worst, std::abs(sol.post_basis[j].amplitudes().dot(
                                                               sol.post_basis[k].amplitudes()) - d));
                        }
                      }
                      return CheckOutcome{"max |<k|j> - delta| <= 1e-12", format_real(worst), worst <= 1e-12};
                    }});
  for (std::size_t k = 0; k < 4; ++k) {
    checks.push_back({"post outcome " + std::to_string(k) + ": sigma_x, sigma_y, sigma_z all dispersion-free",
                      "mean king problem", Provenance::kDerived, [sol, components, k] {
                        const auto g = gtsv_from_ancilla(sol.pre, sol.post_basis[k], 2, 2);
                        std::ostringstream actual;
                        bool ok = true;
                        for (std::size_t c = 0; c < 3; ++c) {
                          const auto r = element_of_reality(g, spectral_decompose(components[c]));
                          ok = ok && r.certain;
                          actual << (c ? ", " : "(") << (r.certain ? format_real(*r.value) : "?");
                        }
                        actual << ")";
                        return CheckOutcome{"three certain values", actual.str(), ok};
                      }});
    checks.push_back({"post outcome " + std::to_string(k) + ": generalized ABL equals joint-system ABL",
                      "generalized two-state vector", Provenance::kDerived, [sol, components, id2, k] {
                        const auto g = gtsv_from_ancilla(sol.pre, sol.post_basis[k], 2, 2);
                        const TwoStateVector joint(sol.post_basis[k], sol.pre);
                        double worst = 0.0;
                        for (const auto& op : components) {
                          const auto dg = abl_probabilities(g, spectral_decompose(op));
                          const auto dj = abl_probabilities(joint, spectral_decompose(tensor(op, id2)));
                          for (std::size_t n = 0; n < dg.size(); ++n) {
                            worst = std::max(worst, std::abs(dg[n].probability - dj[n].probability));
                          }
                        }
                        return CheckOutcome{"max difference <= 1e-12", format_real(worst), worst <= 1e-12};
                      }});
  }
  checks.push_back({"value table (post outcome -> sigma_x, sigma_y, sigma_z)", "mean king problem",
                    Provenance::kDerived, [sol] {
                      std::ostringstream table;
                      for (std::size_t k = 0; k < 4; ++k) {
                        table << (k ? "; " : "") << k << ": (";
                        for (std::size_t c = 0; c < 3; ++c) table << (c ? ", " : "") << (sol.values[k][c] > 0 ? "+1" : "-1");
                        table << ")";
                      }
                      // Every row must differ: the king's component is then recoverable from the outcome.
                      bool distinct = true;
                      for (std::size_t j = 0; j < 4; ++j) {
                        for (std::size_t k = j + 1; k < 4; ++k) distinct = distinct && sol.values[j] != sol.values[k];
                      }
                      return CheckOutcome{"4 distinct rows of certain values", table.str(), distinct};
                    }});
  for (const auto& f : s.fixtures) checks.push_back(monte_carlo_check(f, kDefaultSeed));
  return s;
}

Scenario scenario_correlated_pair() {
  const TwoTimeKernel kernel(Matrix::Identity(2, 2) / std::sqrt(2.0));
  Scenario s{"correlated-pair",
             "two spin-1/2 particles, A evolving forward and B backward in time, joined by the kernel "
             "(|up>_A <up|_B + |down>_A <down|_B)/sqrt2",
             {2, 2},
             {"up", "down"},
             kernel,
             {{"sigma_x", pauli::x()}, {"sigma_y", pauli::y()}, {"sigma_z", pauli::z()}},
             {},
             {}};
  auto& c = s.checks;
  c.push_back({"both particles measure sigma_z: same result with probability 1", "two-time correlated pair",
               Provenance::kPublished, [kernel] {
                 const double p = two_time_same_outcome(kernel, spectral_decompose(pauli::z()));
                 return CheckOutcome{"1", format_real(p), std::abs(p - 1.0) <= kCorrelationTol};
               }});
  c.push_back({"100 random spin directions: same result with probability 1", "two-time correlated pair",
               Provenance::kPublished, [kernel] {
                 Rng rng(kDefaultSeed);
                 double worst = 0.0;
                 for (int i = 0; i < 100; ++i) {
                   const double p = two_time_same_outcome(kernel, spin_along(random_direction(rng)));
                   worst = std::max(worst, std::abs(p - 1.0));
                 }
                 return CheckOutcome{"max |Prob(same) - 1| <= 1e-12", format_real(worst), worst <= kCorrelationTol};
               }});
  c.push_back({"negative control: kernel diag(1, 1/2) is not perfectly correlated in some direction",
               "two-time correlated pair", Provenance::kDerived, [] {
                 Matrix k = Matrix::Zero(2, 2);
                 k(0, 0) = 1.0;
                 k(1, 1) = 0.5;
                 const TwoTimeKernel control(k);
                 Rng rng(kDefaultSeed + 1);
                 double lowest = 1.0;
                 for (int i = 0; i < 100; ++i) {
                   lowest = std::min(lowest, two_time_same_outcome(control, spin_along(random_direction(rng))));
                 }
                 return CheckOutcome{"some direction with Prob(same) < 1 - 1e-6",
                                     "lowest Prob(same) " + format_real(lowest), lowest < 1.0 - 1e-6};
               }});
  c.push_back({"sequential sampling of the kernel (n = 1e5) agrees in the x direction", "two-time correlated pair",
               Provenance::kDerived, [kernel] {
                 const Observable sx = spectral_decompose(pauli::x());
                 const auto mc = monte_carlo_two_time(kernel, sx, sx, kMonteCarloSamples, kDefaultSeed);
                 const double exact = two_time_same_outcome(kernel, sx);
                 const double z = std::abs(mc.same_frequency() - exact) / mc.standard_error();
                 return CheckOutcome{"frequency " + format_real(exact) + " within 5 standard errors",
                                     "frequency " + format_real(mc.same_frequency()) + " (|z| " + format_real(z) + ")",
                                     mc.samples_accepted > 0 && z <= kMonteCarloZ};
               }});
  return s;
}

std::span<const std::string_view> scenario_names() {
  static constexpr std::array<std::string_view, 5> kNames{"spin-box", "three-box", "spin-xz", "mean-king",
                                                          "correlated-pair"};
  return kNames;
}

std::optional<Scenario> make_scenario(std::string_view name) {
  if (name == "spin-box") return scenario_spin_box();
  if (name == "three-box") return scenario_three_box();
  if (name == "spin-xz") return scenario_spin_xz();
  if (name == "mean-king") return scenario_mean_king();
  if (name == "correlated-pair") return scenario_correlated_pair();
  return std::nullopt;
}

Report run_scenario(const Scenario& s) {
  Report report{s.name, {}};
  for (const auto& check : s.checks) {
    CheckOutcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome = {"no error", std::string("error: ") + e.what(), false};
    }
    report.results.push_back({check.description, check.anchor, check.provenance, std::move(outcome.expected),
                              std::move(outcome.actual), outcome.passed});
  }
  return report;
}

}  // namespace tsvlab
