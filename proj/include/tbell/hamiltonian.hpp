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

#include <stdexcept>

#include "tbell/pauli.hpp"

namespace tbell {

/// Coefficients of the probe-mediator Hamiltonian
///
///   H = a q_z^Q + b q_z^M + c q_z^Q q_z^M
///     + f (q_x^Q q_x^M + q_y^Q q_y^M)
///     + g (q_x^Q q_y^M - q_y^Q q_x^M)
///     + r I.
///
/// f and g are the exchange couplings; a mediator that only shifts energies
/// (f = g = 0) behaves like a classical dial and keeps H diagonal.
struct HamiltonianParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double f = 0.0;
  double g = 0.0;
  double r = 0.0;

  [[nodiscard]] bool classical() const { return f == 0.0 && g == 0.0; }
};

/// Full hybrid Hamiltonian on the Q x M space. Hermitian by construction.
[[nodiscard]] inline Matrix build_hqm(const HamiltonianParams& p) {
  using enum Axis;
  return p.a * pauli_string(Z, I) + p.b * pauli_string(I, Z) +
         p.c * pauli_string(Z, Z) +
         p.f * (pauli_string(X, X) + pauli_string(Y, Y)) +
         p.g * (pauli_string(X, Y) - pauli_string(Y, X)) +
         p.r * Matrix::Identity(4, 4);
}

/// Commuting (classical-mediator) Hamiltonian: requires f = g = 0 and builds
/// the diagonal directly, entry (q, m) = a q + b m + c q m + r with
/// q, m in {+1, -1} ordered (++, +-, -+, --).
[[nodiscard]] inline Matrix build_hcm(const HamiltonianParams& p) {
  if (!p.classical()) {
    throw std::invalid_argument(
        "build_hcm: exchange couplings f, g must vanish");
  }
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = p.a + p.b + p.c + p.r;
  h(1, 1) = p.a - p.b - p.c + p.r;
  h(2, 2) = -p.a + p.b - p.c + p.r;
  h(3, 3) = -p.a - p.b + p.c + p.r;
  return h;
}

/// Total z polarization q_z^Q + q_z^M; commutes with every build_hqm output.
struct ConservedObservable {
  Matrix realization;
};

[[nodiscard]] inline const ConservedObservable& conserved_observable() {
  static const ConservedObservable total_z{pauli_string(Axis::Z, Axis::I) +
                                           pauli_string(Axis::I, Axis::Z)};
  return total_z;
}

/// Largest entry of [h, q_z^Q + q_z^M]; zero (to round-off) certifies the
/// excitation-number symmetry of h.
[[nodiscard]] inline double check_conservation(const Matrix& h) {
  return max_abs(commutator(h, conserved_observable().realization));
}

}  // namespace tbell
