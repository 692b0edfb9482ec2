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

#include <string>

#include "doctest.h"
#include "tsvlab/errors.hpp"
#include "tsvlab/problem_file.hpp"

using namespace tsvlab;
using nlohmann::json;

namespace {

const std::string kFixtures = TSVLAB_FIXTURE_DIR;

json minimal() {
  return json::parse(R"({"name": "m", "dims": [2],
    "pre": [[1, 0], [0, 0]], "post": [[0.6, 0], [0.8, 0]],
    "observables": [{"name": "z", "matrix": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]}]})");
}

std::vector<double> probabilities(const ProblemFile& p, const Operator& op) {
  const Observable obs = spectral_decompose(op);
  std::vector<double> out;
  switch (p.mode()) {
    case ProblemMode::kTwoState:
      for (const auto& o : abl_probabilities(p.two_state(), obs).entries()) out.push_back(o.probability);
      break;
    case ProblemMode::kGeneralized:
      for (const auto& o : abl_probabilities(*p.generalized, obs).entries()) out.push_back(o.probability);
      break;
    case ProblemMode::kKernel:
      out.push_back(two_time_same_outcome(*p.kernel, obs));
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("minimal problem file") {
  const ProblemFile p = parse_problem(minimal());
  CHECK(p.mode() == ProblemMode::kTwoState);
  CHECK(p.dim() == 2);
  CHECK(p.name == "m");
  CHECK(p.schedule().end_time() == 0.0);
  CHECK(p.observable("z").is_hermitian());
  CHECK_THROWS_AS(p.observable("x"), ParseError);
  const auto d = abl_probabilities(p.two_state(), spectral_decompose(p.observable("z")));
  CHECK(d.probability_of(1.0) == doctest::Approx(1.0));
}

TEST_CASE("parse errors") {
  SUBCASE("not an object") { CHECK_THROWS_AS(parse_problem(json::array()), ParseError); }
  SUBCASE("missing dims") {
    json j = minimal();
    j.erase("dims");
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("zero dim") {
    json j = minimal();
    j["dims"] = {0};
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("wrong length") {
    json j = minimal();
    j["pre"].push_back({0, 0});
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("bare number where a complex pair belongs") {
    json j = minimal();
    j["pre"][0] = 1;
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("zero state") {
    json j = minimal();
    j["post"] = json::parse("[[0, 0], [0, 0]]");
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("pre without post") {
    json j = minimal();
    j.erase("post");
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("two state descriptions") {
    json j = minimal();
    j["kernel"] = json::parse("[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]");
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("non-Hermitian observable") {
    json j = minimal();
    j["observables"][0]["matrix"][0][1] = {1, 0};
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("negative segment duration") {
    json j = minimal();
    j["hamiltonian"] = json::parse(R"([{"duration": -1, "matrix": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}])");
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("unreadable files") {
    CHECK_THROWS_AS(load_problem(kFixtures + "/malformed.json"), ParseError);
    CHECK_THROWS_AS(load_problem(kFixtures + "/missing_post.json"), ParseError);
    CHECK_THROWS_AS(load_problem(kFixtures + "/does_not_exist.json"), ParseError);
  }
}

TEST_CASE("hamiltonian segments load in order") {
  const ProblemFile p = load_problem(kFixtures + "/timed_flip.json");
  CHECK(p.hamiltonian.size() == 2);
  CHECK(p.schedule().end_time() == doctest::Approx(1.0));
  const auto at_end = abl_at_time(*p.pre, *p.post, p.schedule(), 1.0, spectral_decompose(p.observable("sigma_z")));
  CHECK(at_end.probability_of(-1.0) == doctest::Approx(1.0));
}

TEST_CASE("exported scenarios round-trip exactly") {
  for (const auto name : scenario_names()) {
    CAPTURE(name);
    const ProblemFile first = problem_from_scenario(*make_scenario(name));
    const std::string text = to_json(first).dump(2);
    const ProblemFile second = parse_problem(json::parse(text));
    CHECK(to_json(second).dump(2) == text);
    CHECK(second.mode() == first.mode());
    REQUIRE(second.observables.size() == first.observables.size());
    for (std::size_t i = 0; i < first.observables.size(); ++i) {
      CHECK(second.observables[i].name == first.observables[i].name);
      CHECK(first.observables[i].op.matrix() == second.observables[i].op.matrix());
      CHECK(probabilities(first, first.observables[i].op) == probabilities(second, second.observables[i].op));
    }
  }
}

TEST_CASE("checked-in fixtures match the current export") {
  for (const auto& [file, name] : {std::pair{"spin_box.json", "spin-box"}, std::pair{"three_box.json", "three-box"}}) {
    const ProblemFile loaded = load_problem(kFixtures + "/" + file);
    CHECK(to_json(loaded) == to_json(problem_from_scenario(*make_scenario(name))));
  }
}
