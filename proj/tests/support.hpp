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

// Random instance generators and oracles that share no code path with the
// library routines they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "tsvlab/qcore.hpp"

namespace tsvlab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_normal() { return {normal(), normal()}; }

  Vector vector(std::size_t d) {
    Vector v(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_normal();
    return v;
  }
  Ket ket(std::size_t d) { return Ket(vector(d)); }
  Bra bra(std::size_t d) { return Bra(vector(d)); }

  Matrix hermitian(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    Matrix a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = complex_normal();
    }
    return 0.5 * (a + a.adjoint());
  }

  Matrix unitary(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    Matrix a(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) a(r, c) = complex_normal();
    }
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
  }

  /// U diag(values) U^dagger with the given (possibly repeated) real values.
  Operator with_spectrum(const std::vector<double>& values) {
    const Matrix u = unitary(values.size());
    Vector diag(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) diag(static_cast<Eigen::Index>(i)) = values[i];
    Matrix m = u * diag.asDiagonal() * u.adjoint();
    return Operator(0.5 * (m + m.adjoint()));
  }

  /// Two distinct eigenvalues with random multiplicities, d >= 2.
  Operator dichotomic(std::size_t d) {
    const double a = uniform(-3.0, 3.0);
    double b = uniform(-3.0, 3.0);
    while (std::abs(b - a) < 0.25) b = uniform(-3.0, 3.0);
    const int k = integer(1, static_cast<int>(d) - 1);
    std::vector<double> values(d, a);
    for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i)] = b;
    return with_spectrum(values);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// exp(-i H t) by scaling and squaring of a Taylor series.
inline Matrix expm_oracle(const Matrix& h, double t) {
  Matrix a = Complex{0.0, -t} * h;
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    a /= 2.0;
    norm /= 2.0;
    ++squarings;
  }
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

/// Kronecker product by explicit index arithmetic.
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

/// Weak value by explicit sums over components.
inline Complex weak_value_oracle(const Vector& phi, const Matrix& op, const Vector& psi) {
  Complex num{0.0, 0.0};
  Complex den{0.0, 0.0};
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    den += std::conj(phi(i)) * psi(i);
    for (Eigen::Index j = 0; j < psi.size(); ++j) num += std::conj(phi(i)) * op(i, j) * psi(j);
  }
  return num / den;
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace tsvlab::testing
