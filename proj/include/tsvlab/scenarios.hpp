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

// Worked pre/post-selected systems packaged as self-checking scenarios.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tsvlab/qcore.hpp"
#include "tsvlab/tsv.hpp"

namespace tsvlab {

/// Where a check's expected value comes from: stated in the source work,
/// computed by an independent oracle, or immediate from the definitions.
enum class Provenance { kPublished, kDerived, kTrivial };

std::string_view to_string(Provenance p);

struct CheckOutcome {
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct Check {
  std::string description;
  std::string anchor;  // the concept or worked example the check exercises
  Provenance provenance;
  std::function<CheckOutcome()> run;
};

struct NamedObservable {
  std::string name;
  Operator op;
};

/// One pre/post-selected ensemble with a chosen intermediate observable;
/// the unit of Monte Carlo cross-validation.
struct SelectionFixture {
  std::string label;
  Ket pre;
  Bra post;
  Operator obs;
};

using ScenarioState = std::variant<TwoStateVector, GeneralizedTwoStateVector, TwoTimeKernel>;

struct Scenario {
  std::string name;
  std::string summary;
  std::vector<std::size_t> dims;
  std::vector<std::string> basis_labels;
  ScenarioState state;
  std::vector<NamedObservable> observables;
  std::vector<SelectionFixture> fixtures;
  std::vector<Check> checks;
};

struct CheckResult {
  std::string description;
  std::string anchor;
  Provenance provenance;
  std::string expected;
  std::string actual;
  bool passed;
};

struct Report {
  std::string scenario;
  std::vector<CheckResult> results;

  bool passed() const;
};

Scenario scenario_spin_box();
Scenario scenario_three_box();
Scenario scenario_spin_xz();
Scenario scenario_mean_king();
Scenario scenario_correlated_pair();

/// Stable identifiers: spin-box, three-box, spin-xz, mean-king, correlated-pair.
std::span<const std::string_view> scenario_names();
std::optional<Scenario> make_scenario(std::string_view name);

/// Executes every check. An exception inside a check fails that check and
/// is recorded as its actual value.
Report run_scenario(const Scenario& s);

/// Entangled post-selection basis on spin (x) ancilla under which sigma_x,
/// sigma_y and sigma_z of the spin are all dispersion-free, given the
/// maximally entangled pre-selection (|00> + |11>)/sqrt(2).
struct MeanKingSolution {
  Ket pre;
  std::array<Bra, 4> post_basis;
  /// values[k][c]: the certain outcome of component c (x, y, z) when the
  /// post-selection lands on post_basis[k].
  std::array<std::array<int, 3>, 4> values;
};

/// Constructs the basis and verifies it with the generalized ABL rule.
/// Throws SearchFailedError when verification fails.
MeanKingSolution mean_king_solution();

/// Shortest decimal form used in reports, e.g. "1", "-0.5", "0.333333333333".
std::string format_real(double x);
std::string format_complex(Complex z);

}  // namespace tsvlab
