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

#include "tsvlab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsvlab/errors.hpp"

namespace tsvlab {
namespace {

// Rounding slack under which an input is treated as already unit-norm.
constexpr double kUnitNormSlack = 1e-14;

bool near_hermitian(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= kHermitianTol;
}

bool near_unitary(const Matrix& m) {
  const Matrix err = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return err.cwiseAbs().maxCoeff() <= kUnitaryTol;
}

Vector to_vector(std::span<const Complex> amplitudes) {
  Vector v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t i = 0; i < amplitudes.size(); ++i) v(static_cast<Eigen::Index>(i)) = amplitudes[i];
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace

namespace detail {

UnitVector::UnitVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw DimensionError("state vector must be non-empty");
  const double norm2 = amps_.squaredNorm();
  if (!std::isfinite(norm2)) throw ZeroStateError("state vector has non-finite norm");
  if (norm2 == 0.0) throw ZeroStateError("state vector is zero");
  if (std::abs(norm2 - 1.0) > kUnitNormSlack) amps_ /= std::sqrt(norm2);
}

}  // namespace detail

Ket make_ket(std::span<const Complex> amplitudes) { return Ket(to_vector(amplitudes)); }
Ket make_ket(std::initializer_list<Complex> amplitudes) {
  return make_ket(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}
Bra make_bra(std::span<const Complex> amplitudes) { return Bra(to_vector(amplitudes)); }
Bra make_bra(std::initializer_list<Complex> amplitudes) {
  return make_bra(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

Complex pair(const Bra& phi, const Ket& psi) {
  if (phi.dim() != psi.dim()) throw DimensionError("bra and ket dimensions differ");
  return phi.amplitudes().dot(psi.amplitudes());  // conjugates the left operand
}

Operator::Operator(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionError("operator must be a non-empty square matrix");
  }
  hermitian_ = near_hermitian(m_);
  unitary_ = near_unitary(m_);
}

Operator Operator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Identity(n, n));
}

Operator Operator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(Matrix::Zero(n, n));
}

Operator Operator::projector(const Ket& v) {
  return Operator(v.amplitudes() * v.amplitudes().adjoint());
}

Ket Operator::apply(const Ket& psi) const {
  if (psi.dim() != dim()) throw DimensionError("operator and state dimensions differ");
  return Ket(m_ * psi.amplitudes());
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator dimensions differ");
  return Operator(a.m_ * b.m_);
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw DimensionError("operator dimensions differ");
  return Operator(a.m_ + b.m_);
}

Operator operator*(Complex s, const Operator& a) { return Operator(s * a.m_); }

Complex sandwich(const Bra& phi, const Operator& op, const Ket& psi) {
  if (phi.dim() != op.dim() || psi.dim() != op.dim()) {
    throw DimensionError("sandwich dimensions differ");
  }
  return phi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

namespace pauli {

Operator x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m);
}

Operator y() {
  const Complex i{0.0, 1.0};
  Matrix m(2, 2);
  m << 0, -i, i, 0;
  return Operator(m);
}

Operator z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m);
}

Operator along(double nx, double ny, double nz) {
  return Operator(nx * x().matrix() + ny * y().matrix() + nz * z().matrix());
}

}  // namespace pauli

Ket tensor(const Ket& a, const Ket& b) { return Ket(kron(a.amplitudes(), b.amplitudes())); }
Bra tensor(const Bra& a, const Bra& b) { return Bra(kron(a.amplitudes(), b.amplitudes())); }

Operator tensor(const Operator& a, const Operator& b) {
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  Matrix out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
  for (Eigen::Index r = 0; r < ma.rows(); ++r) {
    for (Eigen::Index c = 0; c < ma.cols(); ++c) {
      out.block(r * mb.rows(), c * mb.cols(), mb.rows(), mb.cols()) = ma(r, c) * mb;
    }
  }
  return Operator(std::move(out));
}

Observable spectral_decompose(const Operator& op, double degeneracy_tol) {
  if (!op.is_hermitian()) throw NotHermitianError("cannot decompose a non-Hermitian operator");
  const Matrix herm = 0.5 * (op.matrix() + op.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Matrix& vectors = solver.eigenvectors();

  std::vector<Eigenspace> spectrum;
  Eigen::Index begin = 0;
  const Eigen::Index n = values.size();
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && values(end) - values(end - 1) <= degeneracy_tol) ++end;
    const Eigen::Index rank = end - begin;
    const auto block = vectors.middleCols(begin, rank);
    Matrix p = block * block.adjoint();
    p = 0.5 * (p + p.adjoint()).eval();
    spectrum.push_back({values.segment(begin, rank).mean(), Operator(std::move(p)),
                        static_cast<std::size_t>(rank)});
    begin = end;
  }
  return Observable(op, std::move(spectrum));
}

HamiltonianSchedule::HamiltonianSchedule(std::size_t dim, double start_time)
    : dim_(dim), start_(start_time) {
  if (dim == 0) throw DimensionError("schedule dimension must be positive");
}

HamiltonianSchedule::HamiltonianSchedule(std::vector<Segment> segments, double start_time)
    : dim_(0), start_(start_time) {
  if (segments.empty()) throw DimensionError("use the dimension constructor for an empty schedule");
  dim_ = segments.front().hamiltonian.dim();
  for (auto& s : segments) then(s.duration, std::move(s.hamiltonian));
}

HamiltonianSchedule& HamiltonianSchedule::then(double duration, Operator hamiltonian) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw Error("segment duration must be finite and non-negative");
  }
  if (hamiltonian.dim() != dim_) throw DimensionError("segment Hamiltonian has wrong dimension");
  if (!hamiltonian.is_hermitian()) throw NotHermitianError("segment Hamiltonian is not Hermitian");
  segments_.push_back({duration, std::move(hamiltonian)});
  return *this;
}

double HamiltonianSchedule::end_time() const {
  double t = start_;
  for (const auto& s : segments_) t += s.duration;
  return t;
}

HamiltonianSchedule HamiltonianSchedule::window(double from, double to) const {
  HamiltonianSchedule out(dim_, from);
  double t = start_;
  for (const auto& s : segments_) {
    const double lo = std::max(t, from);
    const double hi = std::min(t + s.duration, to);
    if (hi > lo) out.then(hi - lo, s.hamiltonian);
    t += s.duration;
  }
  return out;
}

Operator HamiltonianSchedule::propagator() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix u = Matrix::Identity(n, n);
  for (const auto& s : segments_) u = unitary_exp(s.hamiltonian, s.duration).matrix() * u;
  return Operator(std::move(u));
}

Operator unitary_exp(const Operator& hamiltonian, double duration) {
  if (!hamiltonian.is_hermitian()) throw NotHermitianError("generator is not Hermitian");
  const Matrix herm = 0.5 * (hamiltonian.matrix() + hamiltonian.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex{0.0, -solver.eigenvalues()(k) * duration});
  }
  const Matrix& v = solver.eigenvectors();
  return Operator(v * phases.asDiagonal() * v.adjoint());
}

Ket evolve_forward(const Ket& psi, const HamiltonianSchedule& schedule) {
  if (psi.dim() != schedule.dim()) throw DimensionError("state and schedule dimensions differ");
  Vector v = psi.amplitudes();
  for (const auto& s : schedule.segments()) v = unitary_exp(s.hamiltonian, s.duration).matrix() * v;
  return Ket(std::move(v));
}

Bra evolve_backward(const Bra& phi, const HamiltonianSchedule& schedule) {
  if (phi.dim() != schedule.dim()) throw DimensionError("state and schedule dimensions differ");
  // <phi|U has ket components U^dagger |phi>; the latest segment acts first.
  Vector v = phi.amplitudes();
  const auto segs = schedule.segments();
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    v = unitary_exp(it->hamiltonian, it->duration).matrix().adjoint() * v;
  }
  return Bra(std::move(v));
}

}  // namespace tsvlab
