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

// Finite-dimensional Hilbert-space primitives: unit state vectors, operators,
// Kronecker products, spectral decomposition and piecewise-constant unitary
// evolution. Units have hbar = 1 throughout.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tsvlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;

namespace detail {

// Amplitudes are normalized on construction. Input that is already unit norm
// (to within rounding) is stored bit-for-bit, so serialized states re-ingest
// unchanged.
class UnitVector {
 public:
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

 protected:
  explicit UnitVector(Vector amplitudes);
  ~UnitVector() = default;
  UnitVector(const UnitVector&) = default;
  UnitVector(UnitVector&&) noexcept = default;
  UnitVector& operator=(const UnitVector&) = default;
  UnitVector& operator=(UnitVector&&) noexcept = default;

  Vector amps_;
};

}  // namespace detail

/// Forward-evolving state |psi>.
class Ket : public detail::UnitVector {
 public:
  explicit Ket(Vector amplitudes) : UnitVector(std::move(amplitudes)) {}
};

/// Backward-evolving state <phi|. Stores the components of the ket |phi>;
/// conjugation happens when the bra is paired with something.
class Bra : public detail::UnitVector {
 public:
  explicit Bra(Vector amplitudes) : UnitVector(std::move(amplitudes)) {}

  static Bra dual(const Ket& ket) { return Bra(ket.amplitudes()); }
  Ket dual() const { return Ket(amps_); }
};

/// Throws DimensionError on empty input and ZeroStateError on a zero vector.
Ket make_ket(std::span<const Complex> amplitudes);
Ket make_ket(std::initializer_list<Complex> amplitudes);
Bra make_bra(std::span<const Complex> amplitudes);
Bra make_bra(std::initializer_list<Complex> amplitudes);

/// <phi|psi>.
Complex pair(const Bra& phi, const Ket& psi);

/// Square complex matrix with cached Hermiticity and unitarity flags.
class Operator {
 public:
  explicit Operator(Matrix entries);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim);
  /// |v><v| for a unit vector.
  static Operator projector(const Ket& v);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  bool is_hermitian() const { return hermitian_; }
  bool is_unitary() const { return unitary_; }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Ket apply(const Ket& psi) const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);

 private:
  Matrix m_;
  bool hermitian_;
  bool unitary_;
};

/// <phi|O|psi>.
Complex sandwich(const Bra& phi, const Operator& op, const Ket& psi);

namespace pauli {
Operator x();
Operator y();
Operator z();
/// n.sigma for a (not necessarily unit) real direction.
Operator along(double nx, double ny, double nz);
}  // namespace pauli

/// Kronecker products. The left factor is the slow (most significant) index.
Ket tensor(const Ket& a, const Ket& b);
Bra tensor(const Bra& a, const Bra& b);
Operator tensor(const Operator& a, const Operator& b);

struct Eigenspace {
  double value;
  Operator projector;
  std::size_t rank;
};

/// Hermitian operator together with its spectral decomposition into
/// eigenvalue/eigenprojector pairs. Degenerate eigenvalues are merged and the
/// spectrum is sorted ascending.
class Observable {
 public:
  const Operator& op() const { return op_; }
  std::size_t dim() const { return op_.dim(); }
  std::span<const Eigenspace> spectrum() const { return spectrum_; }
  std::size_t num_outcomes() const { return spectrum_.size(); }
  bool is_dichotomic() const { return spectrum_.size() == 2; }

 private:
  friend Observable spectral_decompose(const Operator& op, double degeneracy_tol);
  Observable(Operator op, std::vector<Eigenspace> spectrum)
      : op_(std::move(op)), spectrum_(std::move(spectrum)) {}

  Operator op_;
  std::vector<Eigenspace> spectrum_;
};

/// Eigenvalues whose consecutive gaps are within degeneracy_tol share one
/// eigenspace; the merged value is their mean. Throws NotHermitianError.
Observable spectral_decompose(const Operator& op, double degeneracy_tol = kDegeneracyTol);

struct Segment {
  double duration;
  Operator hamiltonian;
};

/// Piecewise-constant H(t) starting at start_time. Segments are in
/// chronological order.
class HamiltonianSchedule {
 public:
  /// Empty (H = 0, zero length) schedule on a space of the given dimension.
  explicit HamiltonianSchedule(std::size_t dim, double start_time = 0.0);
  explicit HamiltonianSchedule(std::vector<Segment> segments, double start_time = 0.0);

  HamiltonianSchedule& then(double duration, Operator hamiltonian);

  std::size_t dim() const { return dim_; }
  double start_time() const { return start_; }
  double end_time() const;
  std::span<const Segment> segments() const { return segments_; }

  /// The part of the schedule inside [from, to], with segments clipped.
  HamiltonianSchedule window(double from, double to) const;

  /// Time-ordered product U = U_n ... U_1.
  Operator propagator() const;

 private:
  std::size_t dim_;
  double start_;
  std::vector<Segment> segments_;
};

/// exp(-i H t) via the eigendecomposition of the Hermitian generator.
Operator unitary_exp(const Operator& hamiltonian, double duration);

/// Applies segment unitaries to |psi>, earliest segment first.
Ket evolve_forward(const Ket& psi, const HamiltonianSchedule& schedule);

/// Evolves <phi| from the schedule's end back to its start, so that
/// <evolve_backward(phi)|psi> == <phi|evolve_forward(psi)>.
Bra evolve_backward(const Bra& phi, const HamiltonianSchedule& schedule);

}  // namespace tsvlab
