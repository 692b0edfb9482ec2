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

#include "tsvlab/problem_file.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <utility>

#include "tsvlab/errors.hpp"

namespace tsvlab {
namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Vector parse_vector(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of [re, im] pairs");
  if (j.size() != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " components, got " + std::to_string(j.size()));
  }
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], where);
  return v;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    m.row(static_cast<Eigen::Index>(r)) = parse_vector(j[r], cols, where).transpose();
  }
  return m;
}

template <typename T>
T as_state(Vector v, const std::string& where) {
  try {
    return T(std::move(v));
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

ProblemMode ProblemFile::mode() const {
  if (kernel) return ProblemMode::kKernel;
  if (generalized) return ProblemMode::kGeneralized;
  return ProblemMode::kTwoState;
}

std::size_t ProblemFile::dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

const Operator& ProblemFile::observable(std::string_view name) const {
  for (const auto& o : observables) {
    if (o.name == name) return o.op;
  }
  throw ParseError("no observable named '" + std::string(name) + "' in the problem file");
}

TwoStateVector ProblemFile::two_state() const {
  if (!pre || !post) throw ParseError("problem file has no pre/post selection");
  return TwoStateVector(*post, *pre);
}

HamiltonianSchedule ProblemFile::schedule() const {
  HamiltonianSchedule s(dim());
  for (const auto& seg : hamiltonian) s.then(seg.duration, seg.hamiltonian);
  return s;
}

ProblemFile parse_problem(const json& doc) {
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemFile p;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name: expected a string");
    p.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw ParseError("dims: expected a non-empty array of subsystem dimensions");
  }
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw ParseError("dims: entries must be positive integers");
    p.dims.push_back(d.get<std::size_t>());
  }

  const bool has_pair = doc.contains("pre") || doc.contains("post");
  const bool has_generalized = doc.contains("generalized");
  const bool has_kernel = doc.contains("kernel");
  if (int{has_pair} + int{has_generalized} + int{has_kernel} != 1) {
    throw ParseError("exactly one of pre+post, generalized or kernel must be given");
  }

  std::size_t op_dim = p.dim();
  if (has_pair) {
    if (!doc.contains("pre") || !doc.contains("post")) throw ParseError("pre and post must be given together");
    p.pre = as_state<Ket>(parse_vector(doc["pre"], p.dim(), "pre"), "pre");
    p.post = as_state<Bra>(parse_vector(doc["post"], p.dim(), "post"), "post");
  } else if (has_generalized) {
    const json& terms = doc["generalized"];
    if (!terms.is_array() || terms.empty()) throw ParseError("generalized: expected a non-empty array of terms");
    std::vector<GtsvTerm> parsed;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string where = "generalized[" + std::to_string(i) + "]";
      const json& t = terms[i];
      if (!t.is_object() || !t.contains("alpha") || !t.contains("pre") || !t.contains("post")) {
        throw ParseError(where + ": expected {alpha, pre, post}");
      }
      parsed.push_back({parse_complex(t["alpha"], where + ".alpha"),
                        as_state<Bra>(parse_vector(t["post"], p.dim(), where + ".post"), where + ".post"),
                        as_state<Ket>(parse_vector(t["pre"], p.dim(), where + ".pre"), where + ".pre")});
    }
    try {
      p.generalized = GeneralizedTwoStateVector(std::move(parsed));
    } catch (const Error& e) {
      throw ParseError(std::string("generalized: ") + e.what());
    }
  } else {
    if (p.dims.size() != 2) throw ParseError("kernel mode needs dims [forward_dim, backward_dim]");
    try {
      p.kernel = TwoTimeKernel(parse_matrix(doc["kernel"], p.dims[0], p.dims[1], "kernel"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("kernel: ") + e.what());
    }
    op_dim = p.dims[0];
    if (p.dims[0] != p.dims[1]) throw ParseError("kernel mode needs equal forward and backward dims");
  }

  if (doc.contains("hamiltonian")) {
    if (!has_pair) throw ParseError("hamiltonian is only supported with pre/post selection");
    const json& segs = doc["hamiltonian"];
    if (!segs.is_array()) throw ParseError("hamiltonian: expected an array of segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string where = "hamiltonian[" + std::to_string(i) + "]";
      const json& s = segs[i];
      if (!s.is_object() || !s.contains("duration") || !s["duration"].is_number() || !s.contains("matrix")) {
        throw ParseError(where + ": expected {duration, matrix}");
      }
      const double duration = s["duration"].get<double>();
      if (!(duration >= 0.0)) throw ParseError(where + ": duration must be non-negative");
      Operator h(parse_matrix(s["matrix"], p.dim(), p.dim(), where + ".matrix"));
      if (!h.is_hermitian()) throw ParseError(where + ": Hamiltonian is not Hermitian");
      p.hamiltonian.push_back({duration, std::move(h)});
    }
  }

  if (doc.contains("observables")) {
    const json& obs = doc["observables"];
    if (!obs.is_array()) throw ParseError("observables: expected an array");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const std::string where = "observables[" + std::to_string(i) + "]";
      const json& o = obs[i];
      if (!o.is_object() || !o.contains("name") || !o["name"].is_string() || !o.contains("matrix")) {
        throw ParseError(where + ": expected {name, matrix}");
      }
      Operator op(parse_matrix(o["matrix"], op_dim, op_dim, where + ".matrix"));
      if (!op.is_hermitian()) throw ParseError(where + ": observable is not Hermitian");
      p.observables.push_back({o["name"].get<std::string>(), std::move(op)});
    }
  }
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_problem(doc);
}

json to_json(const ProblemFile& p) {
  json doc;
  if (!p.name.empty()) doc["name"] = p.name;
  doc["dims"] = p.dims;
  if (p.pre) doc["pre"] = vector_json(p.pre->amplitudes());
  if (p.post) doc["post"] = vector_json(p.post->amplitudes());
  if (p.generalized) {
    json terms = json::array();
    for (const auto& t : p.generalized->terms()) {
      terms.push_back({{"alpha", complex_json(t.alpha)},
                       {"pre", vector_json(t.forward.amplitudes())},
                       {"post", vector_json(t.backward.amplitudes())}});
    }
    doc["generalized"] = std::move(terms);
  }
  if (p.kernel) doc["kernel"] = matrix_json(p.kernel->matrix());
  if (!p.hamiltonian.empty()) {
    json segs = json::array();
    for (const auto& s : p.hamiltonian) {
      segs.push_back({{"duration", s.duration}, {"matrix", matrix_json(s.hamiltonian.matrix())}});
    }
    doc["hamiltonian"] = std::move(segs);
  }
  json obs = json::array();
  for (const auto& o : p.observables) obs.push_back({{"name", o.name}, {"matrix", matrix_json(o.op.matrix())}});
  doc["observables"] = std::move(obs);
  return doc;
}

ProblemFile problem_from_scenario(const Scenario& s) {
  ProblemFile p;
  p.name = s.name;
  p.dims = s.dims;
  p.observables = s.observables;
  if (const auto* tsv = std::get_if<TwoStateVector>(&s.state)) {
    p.pre = tsv->forward();
    p.post = tsv->backward();
  } else if (const auto* g = std::get_if<GeneralizedTwoStateVector>(&s.state)) {
    p.generalized = *g;
  } else {
    p.kernel = std::get<TwoTimeKernel>(s.state);
  }
  return p;
}

}  // namespace tsvlab
