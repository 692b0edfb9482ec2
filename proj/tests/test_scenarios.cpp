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

#include <cmath>
#include <string>

#include "doctest.h"
#include "tsvlab/measure.hpp"
#include "tsvlab/scenarios.hpp"

using namespace tsvlab;

namespace {

bool same_report(const Report& a, const Report& b) {
  if (a.scenario != b.scenario || a.results.size() != b.results.size()) return false;
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    const auto& x = a.results[i];
    const auto& y = b.results[i];
    if (x.description != y.description || x.expected != y.expected || x.actual != y.actual || x.passed != y.passed) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("every built-in scenario passes its checks") {
  REQUIRE(scenario_names().size() == 5);
  for (const auto name : scenario_names()) {
    CAPTURE(name);
    const auto s = make_scenario(name);
    REQUIRE(s.has_value());
    CHECK(s->name == name);
    CHECK_FALSE(s->checks.empty());
    const Report r = run_scenario(*s);
    for (const auto& c : r.results) {
      CAPTURE(c.description);
      CAPTURE(c.actual);
      CHECK(c.passed);
    }
    CHECK(r.passed());
  }
}

TEST_CASE("scenario reports are reproducible") {
  for (const auto name : scenario_names()) {
    CAPTURE(name);
    CHECK(same_report(run_scenario(*make_scenario(name)), run_scenario(*make_scenario(name))));
  }
}

TEST_CASE("unknown scenario") { CHECK_FALSE(make_scenario("four-box").has_value()); }

TEST_CASE("a throwing check is reported as a failure") {
  Scenario s = scenario_spin_xz();
  s.checks = {Check{"throws", "error path", Provenance::kTrivial,
                    []() -> CheckOutcome { throw std::runtime_error("boom"); }}};
  const Report r = run_scenario(s);
  REQUIRE(r.results.size() == 1);
  CHECK_FALSE(r.results[0].passed);
  CHECK_FALSE(r.passed());
}

TEST_CASE("mean-king assignment") {
  const MeanKingSolution sol = mean_king_solution();
  const std::array<Operator, 3> components{pauli::x(), pauli::y(), pauli::z()};

  // The post-selection basis is orthonormal.
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const Complex ip = sol.post_basis[a].amplitudes().dot(sol.post_basis[b].amplitudes());
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  // Each row is a distinct sign pattern whose product is +1.
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(sol.values[k][0] * sol.values[k][1] * sol.values[k][2] == 1);
    for (std::size_t j = 0; j < k; ++j) CHECK(sol.values[k] != sol.values[j]);
  }
  // Each table entry is a certain outcome under ABL and equals the weak value.
  for (std::size_t k = 0; k < 4; ++k) {
    const TwoStateVector tsv(sol.post_basis[k], sol.pre);
    for (std::size_t c = 0; c < 3; ++c) {
      const Operator op = tensor(components[c], Operator::identity(2));
      const auto rep = element_of_reality(tsv, spectral_decompose(op));
      REQUIRE(rep.certain);
      CHECK(*rep.value == doctest::Approx(sol.values[k][c]));
      CHECK(std::abs(weak_value(tsv, op) - double(sol.values[k][c])) <= 1e-10);
    }
    CHECK(std::norm(tsv.overlap()) == doctest::Approx(0.25));
  }
}

TEST_CASE("format helpers") {
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(1e-14) == "0");
  CHECK(format_real(-1.0) == "-1");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_complex(Complex{1, 0}) == "1 + 0i");
  CHECK(format_complex(Complex{0, -2}) == "0 - 2i");
}

TEST_CASE("provenance labels") {
  CHECK(to_string(Provenance::kPublished) == "published");
  CHECK(to_string(Provenance::kDerived) == "derived");
  CHECK(to_string(Provenance::kTrivial) == "trivial");
}
