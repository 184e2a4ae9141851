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

#include <cmath>
#include <stdexcept>
#include <utility>

#include "tbell/hamiltonian.hpp"
#include "tbell/pauli.hpp"

namespace tbell {

/// Probe observables that enter the Bell combination: q_z^Q and q_x^Q.
enum class ProbeAxis { Z, X };

enum class EvolutionMethod { closed_form, numeric };

/// A Heisenberg-picture probe observable U(t)^dag A U(t), tagged with how it
/// was produced so equivalence tests can tell the routes apart.
struct EvolvedObservable {
  ProbeAxis base;
  double time;
  Matrix realization;
  EvolutionMethod method;
};

/// Below this, the exchange precession frequency is treated as zero and the
/// analytic limits of the sin(Omega t)/Omega family are used.
inline constexpr double k_degenerate_omega = 1e-9;

/// Frequencies that organize every closed form: the exchange precession
/// Omega = sqrt((a-b)^2 + 4(f^2+g^2)), the sum a+b, and the detuning a-b.
struct OmegaParams {
  double omega;
  double sum_ab;
  double detuning;
};

[[nodiscard]] inline OmegaParams omega_params(const HamiltonianParams& p) {
  const double d = p.a - p.b;
  return {std::sqrt(d * d + 4.0 * (p.f * p.f + p.g * p.g)), p.a + p.b, d};
}

/// sin(Omega t)/Omega, continued through Omega = 0 by its limit t.
[[nodiscard]] inline double sin_over_omega(double omega, double t) {
  return omega < k_degenerate_omega ? t : std::sin(omega * t) / omega;
}

/// sin(2 Omega t)/Omega, continued through Omega = 0 by its limit 2t.
[[nodiscard]] inline double sin2_over_omega(double omega, double t) {
  return omega < k_degenerate_omega ? 2.0 * t : std::sin(2.0 * omega * t) / omega;
}

/// Pauli-string weights of the evolved q_z^Q(t):
///
///   q_z^Q(t) = zq q_z^Q + zm q_z^M
///            + antisym (q_x^Q q_y^M - q_y^Q q_x^M)
///            + sym     (q_x^Q q_x^M + q_y^Q q_y^M).
///
/// zq + zm = 1 for all t (the z weight only migrates between subsystems).
struct QzCoefficients {
  double zq;
  double zm;
  double antisym;
  double sym;
};

[[nodiscard]] inline QzCoefficients qz_coefficients(const HamiltonianParams& p,
                                                    double t) {
  const OmegaParams w = omega_params(p);
  const double s1 = sin_over_omega(w.omega, t);
  const double s2 = sin2_over_omega(w.omega, t);
  const double exch = p.f * p.f + p.g * p.g;
  // (1 - cos(2 Omega t)) / Omega^2 == 2 s1^2 identically; this spelling stays
  // finite on the Omega -> 0 manifold.
  const double c2 = 2.0 * s1 * s1;
  return {
      1.0 - 4.0 * exch * s1 * s1,
      4.0 * exch * s1 * s1,
      -p.f * s2 + p.g * w.detuning * c2,
      p.g * s2 + p.f * w.detuning * c2,
  };
}

/// Pauli-string weights of the evolved q_x^Q(t) over its eight-string support
/// {XI, XZ, YI, YZ, IX, IY, ZX, ZY} (first letter probe, second mediator).
struct QxCoefficients {
  double xi;
  double xz;
  double yi;
  double yz;
  double ix;
  double iy;
  double zx;
  double zy;
};

[[nodiscard]] inline QxCoefficients qx_coefficients(const HamiltonianParams& p,
                                                    double t) {
  const OmegaParams w = omega_params(p);
  const double s1 = sin_over_omega(w.omega, t);
  const double cw = std::cos(w.omega * t);
  const double cp = std::cos((w.sum_ab + 2.0 * p.c) * t);
  const double sp = std::sin((w.sum_ab + 2.0 * p.c) * t);
  const double cm = std::cos((w.sum_ab - 2.0 * p.c) * t);
  const double sm = std::sin((w.sum_ab - 2.0 * p.c) * t);
  const double ds1 = w.detuning * s1;
  return {
      0.5 * (cw * (cp + cm) - ds1 * (sp + sm)),
      0.5 * (cw * (cp - cm) - ds1 * (sp - sm)),
      0.5 * (-cw * (sp + sm) - ds1 * (cp + cm)),
      0.5 * (-cw * (sp - sm) - ds1 * (cp - cm)),
      s1 * (p.f * (sp - sm) - p.g * (cp - cm)),
      s1 * (p.f * (cp - cm) + p.g * (sp - sm)),
      s1 * (p.f * (sp + sm) - p.g * (cp + cm)),
      s1 * (p.f * (cp + cm) + p.g * (sp + sm)),
  };
}

namespace detail {

/// Cached 4x4 Pauli strings used by the closed-form assemblies.
struct PauliStrings {
  Matrix zi, iz, xi, ix, yi, iy, xz, zx, yz, zy, xx, yy, xy, yx;
};

[[nodiscard]] inline const PauliStrings& strings() {
  using enum Axis;
  static const PauliStrings s{
      pauli_string(Z, I), pauli_string(I, Z), pauli_string(X, I),
      pauli_string(I, X), pauli_string(Y, I), pauli_string(I, Y),
      pauli_string(X, Z), pauli_string(Z, X), pauli_string(Y, Z),
      pauli_string(Z, Y), pauli_string(X, X), pauli_string(Y, Y),
      pauli_string(X, Y), pauli_string(Y, X),
  };
  return s;
}

[[nodiscard]] inline const Matrix& base_matrix(ProbeAxis axis) {
  return axis == ProbeAxis::Z ? strings().zi : strings().xi;
}

}  // namespace detail

/// Spectral cache for one Hamiltonian: diagonalize once, then evolve to any
/// time for the cost of two small matrix products. Used heavily by sweeps.
class Propagator {
 public:
  explicit Propagator(const Matrix& h,
                      double herm_tol = default_tolerances().hermiticity) {
    if (!is_hermitian(h, herm_tol)) {
      throw std::invalid_argument("Propagator: Hamiltonian fails Hermiticity check");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
  }

  /// U(t) = exp(-i h t).
  [[nodiscard]] Matrix unitary(double t) const {
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
      phases[i] = std::exp(Complex(0.0, -eigenvalues_[i] * t));
    }
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
  }

  /// Heisenberg conjugation U(t)^dag A U(t).
  [[nodiscard]] Matrix conjugate(const Matrix& observable, double t) const {
    const Matrix u = unitary(t);
    return u.adjoint() * observable * u;
  }

 private:
  Eigen::VectorXd eigenvalues_;
  Matrix eigenvectors_;
};

/// Reference route: evolve by explicit diagonalization. Always available,
/// never uses the closed forms.
[[nodiscard]] inline EvolvedObservable evolve_numeric(
    ProbeAxis base, const HamiltonianParams& p, double t) {
  const Propagator prop(build_hqm(p));
  return {base, t, prop.conjugate(detail::base_matrix(base), t),
          EvolutionMethod::numeric};
}

/// Closed-form q_z^Q(t), assembled from qz_coefficients.
[[nodiscard]] inline EvolvedObservable closed_form_qz(
    const HamiltonianParams& p, double t) {
  const QzCoefficients k = qz_coefficients(p, t);
  const auto& s = detail::strings();
  Matrix m = k.zq * s.zi + k.zm * s.iz + k.antisym * (s.xy - s.yx) +
             k.sym * (s.xx + s.yy);
  return {ProbeAxis::Z, t, std::move(m), EvolutionMethod::closed_form};
}

/// Closed-form q_x^Q(t), assembled from qx_coefficients.
[[nodiscard]] inline EvolvedObservable closed_form_qx(
    const HamiltonianParams& p, double t) {
  const QxCoefficients k = qx_coefficients(p, t);
  const auto& s = detail::strings();
  Matrix m = k.xi * s.xi + k.xz * s.xz + k.yi * s.yi + k.yz * s.yz +
             k.ix * s.ix + k.iy * s.iy + k.zx * s.zx + k.zy * s.zy;
  return {ProbeAxis::X, t, std::move(m), EvolutionMethod::closed_form};
}

}  // namespace tbell
