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

// JSON problem files. Complex numbers are [re, im] pairs, matrices are
// row-major nested arrays and subsystems follow the tensor convention (left
// factor most significant). Exactly one of {pre + post, generalized, kernel}
// is present:
//
//   {
//     "name": "spin-box",
//     "dims": [2, 2],
//     "pre":  [[re, im], ...],
//     "post": [[re, im], ...],
//     "hamiltonian": [{"duration": 0.5, "matrix": [[[re, im], ...], ...]}],
//     "observables": [{"name": "P_A_up", "matrix": [[[re, im], ...], ...]}],
//     "generalized": [{"alpha": [re, im], "pre": [...], "post": [...]}],
//     "kernel": [[[re, im], ...], ...]
//   }
//
// In kernel mode dims is [forward_dim, backward_dim] and the observables act
// on a single particle.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tsvlab/qcore.hpp"
#include "tsvlab/scenarios.hpp"
#include "tsvlab/tsv.hpp"

namespace tsvlab {

enum class ProblemMode { kTwoState, kGeneralized, kKernel };

struct ProblemFile {
  std::string name;
  std::vector<std::size_t> dims;
  std::optional<Ket> pre;
  std::optional<Bra> post;
  std::vector<Segment> hamiltonian;
  std::vector<NamedObservable> observables;
  std::optional<GeneralizedTwoStateVector> generalized;
  std::optional<TwoTimeKernel> kernel;

  ProblemMode mode() const;
  /// Product of dims (the joint dimension of pre/post or the generalized terms).
  std::size_t dim() const;
  /// Throws ParseError for an unknown name.
  const Operator& observable(std::string_view name) const;
  TwoStateVector two_state() const;
  /// Starts at t = 0; an absent hamiltonian gives an empty schedule.
  HamiltonianSchedule schedule() const;
};

/// Validates shapes and the one-mode rule; throws ParseError.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile load_problem(const std::filesystem::path& path);

/// Numbers are written in shortest round-trip form, so parse_problem(to_json(p))
/// reproduces every double bit for bit.
nlohmann::json to_json(const ProblemFile& problem);

ProblemFile problem_from_scenario(const Scenario& s);

}  // namespace tsvlab
