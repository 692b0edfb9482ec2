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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsvlab/errors.hpp"
#include "tsvlab/measure.hpp"
#include "tsvlab/problem_file.hpp"
#include "tsvlab/scenarios.hpp"
#include "tsvlab/tsv.hpp"

namespace tsvlab::cli {
namespace {

using nlohmann::json;

constexpr double kMaxZ = 5.0;
constexpr double kStrongSeparation = 8.0;  // bump separation in units of sigma

struct Options {
  std::string format = "table";
  std::string scenario;
  std::string file;
  std::string observable;
  std::optional<double> time;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  double g = 0.0;
  double sigma = 1.0;
  std::optional<double> half_range;
  std::optional<std::size_t> points;
  std::string out_path;
};

bool as_json(const Options& o) { return o.format == "json"; }

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.results) {
    checks.push_back({{"description", c.description},
                      {"anchor", c.anchor},
                      {"provenance", std::string(to_string(c.provenance))},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed}});
  }
  return {{"scenario", r.scenario}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = make_scenario(o.scenario);
  if (!s) {
    err << "error: unknown scenario '" << o.scenario << "' (known:";
    for (auto n : scenario_names()) err << ' ' << n;
    err << ")\n";
    return kExitUsage;
  }
  const Report r = run_scenario(*s);
  if (as_json(o)) {
    out << report_json(r).dump(2) << '\n';
  } else {
    out << "scenario " << r.scenario << ": " << s->summary << '\n';
    for (const auto& c : r.results) {
      out << (c.passed ? "  [PASS] " : "  [FAIL] ") << c.description << " (" << to_string(c.provenance) << "; "
          << c.anchor << ")\n"
          << "         expected: " << c.expected << "\n"
          << "         actual:   " << c.actual << '\n';
    }
    out << (r.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

void print_distribution(const Distribution& d, const Options& o, std::ostream& out) {
  if (as_json(o)) {
    json entries = json::array();
    for (const auto& e : d.entries()) entries.push_back({{"eigenvalue", e.value}, {"probability", e.probability}});
    out << json{{"observable", o.observable}, {"distribution", std::move(entries)}}.dump(2) << '\n';
    return;
  }
  for (const auto& e : d.entries()) out << format_real(e.value) << ": " << format_real(e.probability) << '\n';
}

int cmd_abl(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem(o.file);
  const Observable obs = spectral_decompose(p.observable(o.observable));
  switch (p.mode()) {
    case ProblemMode::kTwoState: {
      if (o.time && !p.hamiltonian.empty()) {
        print_distribution(abl_at_time(*p.pre, *p.post, p.schedule(), *o.time, obs), o, out);
      } else {
        if (o.time) err << "note: no hamiltonian in the problem file; --time ignored\n";
        print_distribution(abl_probabilities(p.two_state(), obs), o, out);
      }
      return kExitOk;
    }
    case ProblemMode::kGeneralized:
      print_distribution(abl_probabilities(*p.generalized, obs), o, out);
      return kExitOk;
    case ProblemMode::kKernel: {
      json pairs = json::array();
      for (const auto& a : obs.spectrum()) {
        for (const auto& b : obs.spectrum()) {
          const double prob = two_time_joint(*p.kernel, a.projector, b.projector);
          pairs.push_back({{"a", a.value}, {"b", b.value}, {"probability", prob}});
          if (!as_json(o)) out << "(" << format_real(a.value) << ", " << format_real(b.value) << "): " << format_real(prob) << '\n';
        }
      }
      const double same = two_time_same_outcome(*p.kernel, obs);
      if (as_json(o)) {
        out << json{{"observable", o.observable}, {"joint", std::move(pairs)}, {"same", same}}.dump(2) << '\n';
      } else {
        out << "same: " << format_real(same) << '\n';
      }
      return kExitOk;
    }
  }
  return kExitUsage;
}

int cmd_weak(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem(o.file);
  const Operator& op = p.observable(o.observable);
  Complex w;
  switch (p.mode()) {
    case ProblemMode::kTwoState: w = weak_value(p.two_state(), op); break;
    case ProblemMode::kGeneralized: w = weak_value(*p.generalized, op); break;
    case ProblemMode::kKernel:
      err << "error: weak values need a pre/post or generalized problem file\n";
      return kExitUsage;
  }
  if (as_json(o)) {
    out << json{{"observable", o.observable}, {"re", w.real()}, {"im", w.imag()}}.dump(2) << '\n';
  } else {
    out << format_complex(w) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem(o.file);
  if (p.mode() != ProblemMode::kTwoState) {
    err << "error: verify needs a pre/post problem file\n";
    return kExitUsage;
  }
  if (o.samples == 0 || o.workers == 0) {
    err << "error: --samples and --workers must be at least 1\n";
    return kExitUsage;
  }
  const Observable obs = spectral_decompose(p.observable(o.observable));
  const MonteCarloReport mc = monte_carlo_abl(*p.pre, *p.post, obs, o.samples, o.seed, o.workers);
  if (mc.samples_postselected == 0) {
    err << "error: no trial survived post-selection (" << mc.samples_total << " samples)\n";
    return kExitNoPostselection;
  }
  const Distribution abl = abl_probabilities(p.two_state(), obs);
  bool ok = true;
  json rows = json::array();
  if (!as_json(o)) out << "outcome  abl  frequency  std_error  z\n";
  for (const auto& t : mc.outcomes) {
    const double expected = abl.probability_of(t.value);
    const double z = (t.frequency - expected) / t.standard_error;
    ok = ok && std::abs(z) <= kMaxZ;
    rows.push_back({{"eigenvalue", t.value},
                    {"abl", expected},
                    {"frequency", t.frequency},
                    {"count", t.count},
                    {"standard_error", t.standard_error},
                    {"z", z}});
    if (!as_json(o)) {
      out << format_real(t.value) << "  " << format_real(expected) << "  " << format_real(t.frequency) << "  "
          << format_real(t.standard_error) << "  " << format_real(z) << '\n';
    }
  }
  if (as_json(o)) {
    out << json{{"observable", o.observable},
                {"seed", mc.seed},
                {"workers", mc.workers},
                {"samples_total", mc.samples_total},
                {"samples_postselected", mc.samples_postselected},
                {"outcomes", std::move(rows)},
                {"passed", ok}}
               .dump(2)
        << '\n';
  } else {
    out << "post-selected " << mc.samples_postselected << " of " << mc.samples_total << " (seed " << mc.seed
        << ", workers " << mc.workers << ")\n"
        << (ok ? "all |z| <= 5" : "some |z| > 5") << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_pointer(const Options& o, std::ostream& out, std::ostream& err) {
  const ProblemFile p = load_problem(o.file);
  if (p.mode() != ProblemMode::kTwoState) {
    err << "error: pointer needs a pre/post problem file\n";
    return kExitUsage;
  }
  const Observable obs = spectral_decompose(p.observable(o.observable));
  PointerConfig cfg = PointerConfig::auto_sized(o.g, o.sigma, obs);
  if (o.half_range) cfg.half_range = *o.half_range;
  if (o.points) cfg.points = *o.points;
  const TwoStateVector tsv = p.two_state();
  const PointerResult r = weak_measure_pointer(tsv, obs, cfg);

  if (!o.out_path.empty()) {
    std::ofstream csv(o.out_path);
    if (!csv) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
    write_density_csv(r, csv);
  }

  std::optional<Complex> w;
  try {
    w = weak_value(tsv, obs.op());
  } catch (const OrthogonalSelectionError&) {
  }

  double min_gap = INFINITY;
  for (std::size_t n = 1; n < obs.num_outcomes(); ++n) {
    min_gap = std::min(min_gap, obs.spectrum()[n].value - obs.spectrum()[n - 1].value);
  }
  const bool strong = obs.num_outcomes() > 1 && o.g * min_gap >= kStrongSeparation * o.sigma;

  json doc{{"observable", o.observable},
           {"g", o.g},
           {"sigma", o.sigma},
           {"points", cfg.points},
           {"half_range", cfg.half_range},
           {"mean_shift", r.mean_shift},
           {"mean_shift_over_g", r.mean_shift / o.g},
           {"postselection_rate", r.postselection_rate}};
  doc["weak_value_re"] = w ? json(w->real()) : json(nullptr);
  if (!as_json(o)) {
    out << "mean_shift " << format_real(r.mean_shift) << '\n'
        << "mean_shift/g " << format_real(r.mean_shift / o.g) << '\n'
        << "Re(O_w) " << (w ? format_real(w->real()) : std::string("undefined (orthogonal selection)")) << '\n'
        << "postselection_rate " << format_real(r.postselection_rate) << '\n';
  }
  if (strong) {
    const auto masses = bump_masses(r, obs, o.g);
    const Distribution abl = abl_probabilities(tsv, obs);
    json bumps = json::array();
    if (!as_json(o)) out << "strong regime: bump masses vs ABL\n";
    for (std::size_t n = 0; n < masses.size(); ++n) {
      const double v = obs.spectrum()[n].value;
      bumps.push_back({{"eigenvalue", v}, {"mass", masses[n]}, {"abl", abl.probability_of(v)}});
      if (!as_json(o)) out << "  " << format_real(v) << ": " << format_real(masses[n]) << " vs " << format_real(abl.probability_of(v)) << '\n';
    }
    doc["strong_regime"] = std::move(bumps);
  }
  if (as_json(o)) out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = make_scenario(o.scenario);
  if (!s) {
    err << "error: unknown scenario '" << o.scenario << "'\n";
    return kExitUsage;
  }
  const std::string text = to_json(problem_from_scenario(*s)).dump(2);
  if (o.out_path.empty()) {
    out << text << '\n';
    return kExitOk;
  }
  std::ofstream file(o.out_path);
  if (!file) {
    err << "error: cannot write " << o.out_path << '\n';
    return kExitUsage;
  }
  file << text << '\n';
  return kExitOk;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NullEnsembleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNullEnsemble;
  } catch (const OrthogonalSelectionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNullEnsemble;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pre- and post-selected quantum systems: ABL probabilities, weak values and checks", "tsvlab"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"table", "json"});

  auto* run_cmd = app.add_subcommand("run", "Run a built-in scenario and its checks");
  run_cmd->add_option("scenario", o.scenario, "Scenario name")->required();
  run_cmd->add_option("--format", o.format, "table or json")->check(format_check);

  auto add_file_options = [&](CLI::App* cmd) {
    cmd->add_option("--file", o.file, "Problem file (JSON)")->required();
    cmd->add_option("--observable", o.observable, "Observable name in the problem file")->required();
    cmd->add_option("--format", o.format, "table or json")->check(format_check);
  };

  auto* abl_cmd = app.add_subcommand("abl", "ABL probabilities of an intermediate measurement");
  add_file_options(abl_cmd);
  abl_cmd->add_option("--time", o.time, "Measurement time inside the hamiltonian schedule");

  auto* weak_cmd = app.add_subcommand("weak", "Weak value of an observable");
  add_file_options(weak_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo ensemble compared against the ABL rule");
  add_file_options(verify_cmd);
  verify_cmd->add_option("--samples", o.samples, "Number of trials");
  verify_cmd->add_option("--seed", o.seed, "Master seed");
  verify_cmd->add_option("--workers", o.workers, "Worker threads");

  auto* pointer_cmd = app.add_subcommand("pointer", "Gaussian pointer coupled to the observable");
  add_file_options(pointer_cmd);
  pointer_cmd->add_option("--g", o.g, "Coupling strength")->required();
  pointer_cmd->add_option("--sigma", o.sigma, "Pointer width");
  pointer_cmd->add_option("--out", o.out_path, "CSV output path (position,density)");
  pointer_cmd->add_option("--half-range", o.half_range, "Grid half range (default: auto)");
  pointer_cmd->add_option("--points", o.points, "Grid points (default: auto)");

  auto* export_cmd = app.add_subcommand("export-scenario", "Write a scenario as a problem file");
  export_cmd->add_option("scenario", o.scenario, "Scenario name")->required();
  export_cmd->add_option("--out", o.out_path, "Output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return guarded(err, [&] {
    if (run_cmd->parsed()) return cmd_run(o, out, err);
    if (abl_cmd->parsed()) return cmd_abl(o, out, err);
    if (weak_cmd->parsed()) return cmd_weak(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (pointer_cmd->parsed()) return cmd_pointer(o, out, err);
    if (export_cmd->parsed()) return cmd_export(o, out, err);
    return kExitUsage;
  });
}

}  // namespace tsvlab::cli
