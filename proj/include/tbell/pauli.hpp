// Copyright 2026 The tbell Authors
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

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace tbell {

using Complex = std::complex<double>;

/// Dense complex matrix; every operator in the library lives on 2, 4, or 8
/// dimensions, so dynamic sizing costs nothing that matters here.
using Matrix = Eigen::MatrixXcd;

/// Central tolerance knobs. Checks that gate on matrix structure use
/// `hermiticity`; unitary round-trip checks use `unitarity`; closed-form vs
/// numeric comparisons default to `equivalence`.
struct Tolerances {
  double hermiticity = 1e-12;
  double unitarity = 1e-10;
  double equivalence = 1e-10;
};

[[nodiscard]] inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

enum class Axis { I, X, Y, Z };

/// Single-qubit Pauli matrix (Axis::I gives the 2x2 identity).
[[nodiscard]] inline const Matrix& pauli(Axis axis) {
  static const Matrix id = Matrix::Identity(2, 2);
  static const Matrix sx = (Matrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished();
  static const Matrix sy =
      (Matrix(2, 2) << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0)
          .finished();
  static const Matrix sz = (Matrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished();
  switch (axis) {
    case Axis::I:
      return id;
    case Axis::X:
      return sx;
    case Axis::Y:
      return sy;
    case Axis::Z:
      return sz;
  }
  throw std::invalid_argument("pauli: unknown axis");
}

/// Largest entrywise magnitude; the distance measure used by every check.
[[nodiscard]] inline double max_abs(const Matrix& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Kronecker product. The register never exceeds three qubits, so results
/// larger than 8x8 indicate a composition bug and are rejected.
[[nodiscard]] inline Matrix tensor(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("tensor: factors must be square");
  }
  if (a.rows() * b.rows() > 8) {
    throw std::invalid_argument(
        "tensor: result would exceed the three-qubit register");
  }
  return Eigen::kroneckerProduct(a, b);
}

[[nodiscard]] inline Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

[[nodiscard]] inline bool is_hermitian(
    const Matrix& m, double tol = default_tolerances().hermiticity) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

[[nodiscard]] inline bool is_unitary(
    const Matrix& m, double tol = default_tolerances().unitarity) {
  return m.rows() == m.cols() &&
         max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <=
             tol;
}

/// exp(-i h t) for Hermitian h, via the spectral decomposition. Exact
/// unitarity up to eigensolver round-off; rejects non-Hermitian input.
[[nodiscard]] inline Matrix hermitian_expm(
    const Matrix& h, double t,
    double herm_tol = default_tolerances().hermiticity) {
  if (!is_hermitian(h, herm_tol)) {
    throw std::invalid_argument("hermitian_expm: input fails Hermiticity check");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -es.eigenvalues()[i] * t));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Which factor of the probe(Q) x mediator(M) product space an observable
/// acts on. The hybrid space is ordered Q first: q^Q = sigma x I,
/// q^M = I x sigma.
enum class Subsystem { Q, M };

/// A single-subsystem Pauli observable together with its 4x4 realization on
/// the hybrid space.
struct Descriptor {
  Subsystem subsystem;
  Axis axis;
  Matrix realization;
};

[[nodiscard]] inline Descriptor descriptor(Subsystem subsystem, Axis axis) {
  if (axis == Axis::I) {
    throw std::invalid_argument("descriptor: axis must be X, Y, or Z");
  }
  Matrix m = subsystem == Subsystem::Q ? tensor(pauli(axis), pauli(Axis::I))
                                       : tensor(pauli(Axis::I), pauli(axis));
  return {subsystem, axis, std::move(m)};
}

/// Two-letter Pauli string sigma_q x sigma_m on the hybrid space.
[[nodiscard]] inline Matrix pauli_string(Axis q, Axis m) {
  return tensor(pauli(q), pauli(m));
}

}  // namespace tbell
