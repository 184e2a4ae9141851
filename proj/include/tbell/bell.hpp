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
#include <vector>

#include "tbell/hamiltonian.hpp"
#include "tbell/heisenberg.hpp"
#include "tbell/pauli.hpp"

namespace tbell {

/// Mediator state as a Bloch vector (alpha, beta, gamma) = (<x>, <y>, <z>),
/// rho_M = (I + alpha sigma_x + beta sigma_y + gamma sigma_z) / 2. States with
/// alpha = beta = 0 are diagonal in the energy basis ("classical" states).
struct MediatorState {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  /// Validating constructor: the vector must lie in the closed Bloch ball.
  [[nodiscard]] static MediatorState bloch(double alpha, double beta,
                                           double gamma) {
    if (alpha * alpha + beta * beta + gamma * gamma > 1.0 + 1e-12) {
      throw std::invalid_argument("MediatorState: vector leaves the Bloch ball");
    }
    return {alpha, beta, gamma};
  }

  /// Energy-diagonal state (no coherence): Bloch vector (0, 0, gamma).
  [[nodiscard]] static MediatorState classical(double gamma) {
    return bloch(0.0, 0.0, gamma);
  }

  [[nodiscard]] static MediatorState maximally_mixed() { return {}; }
  [[nodiscard]] static MediatorState x_plus() { return {1.0, 0.0, 0.0}; }
  [[nodiscard]] static MediatorState x_minus() { return {-1.0, 0.0, 0.0}; }
  [[nodiscard]] static MediatorState y_plus() { return {0.0, 1.0, 0.0}; }
  [[nodiscard]] static MediatorState y_minus() { return {0.0, -1.0, 0.0}; }
  [[nodiscard]] static MediatorState z_plus() { return {0.0, 0.0, 1.0}; }
  [[nodiscard]] static MediatorState z_minus() { return {0.0, 0.0, -1.0}; }

  [[nodiscard]] bool classical_diagonal() const {
    return alpha == 0.0 && beta == 0.0;
  }

  /// 2x2 density matrix realization.
  [[nodiscard]] Matrix realization() const {
    return 0.5 * (Matrix::Identity(2, 2) + alpha * pauli(Axis::X) +
                  beta * pauli(Axis::Y) + gamma * pauli(Axis::Z));
  }
};

/// One row of the Bell combination: which probe observable is taken early
/// and which late.
struct MeasurementPair {
  ProbeAxis first;
  ProbeAxis second;
};

/// Symmetrized two-time correlator on a maximally mixed probe:
/// E(A, B) = Re (1/2) Tr[A B (I_Q x rho_M)]. Both operators act on the 4-dim
/// hybrid space; B is typically an evolved observable.
[[nodiscard]] inline double correlator(const Matrix& a, const Matrix& b,
                                       const MediatorState& state) {
  if (a.rows() != 4 || a.cols() != 4 || b.rows() != 4 || b.cols() != 4) {
    throw std::invalid_argument("correlator: operators must be 4x4");
  }
  const Matrix weight = tensor(Matrix::Identity(2, 2), state.realization());
  return 0.5 * (a * b * weight).trace().real();
}

enum class Backend { numeric, closed_form };

namespace detail {

/// E-combination |E11 - E12 + E21 + E22| from four already-evolved late
/// observables, with A1 = q_z^Q and A2 = q_x^Q.
[[nodiscard]] inline double bell_from_evolved(const Matrix& b1,
                                              const Matrix& b2,
                                              const MediatorState& state) {
  const auto& s = strings();
  const double e11 = correlator(s.zi, b1, state);
  const double e12 = correlator(s.zi, b2, state);
  const double e21 = correlator(s.xi, b1, state);
  const double e22 = correlator(s.xi, b2, state);
  return std::abs(e11 - e12 + e21 + e22);
}

}  // namespace detail

/// Bell quantity at time t through a prebuilt propagator (numeric route).
/// B1 = q_z^Q(t), B2 = q_x^Q(t).
[[nodiscard]] inline double bell_quantity(const Propagator& prop,
                                          const MediatorState& state,
                                          double t) {
  const auto& s = detail::strings();
  return detail::bell_from_evolved(prop.conjugate(s.zi, t),
                                   prop.conjugate(s.xi, t), state);
}

/// Closed-form Bell quantity for an arbitrary mediator Bloch vector. This is
/// the general analytic expression, kept in its published four-term grouping
/// as an independent route from the correlator pipeline.
[[nodiscard]] inline double closed_form_general(const HamiltonianParams& p,
                                                const MediatorState& state,
                                                double t) {
  const OmegaParams w = omega_params(p);
  const double s1 = sin_over_omega(w.omega, t);
  const double cw = std::cos(w.omega * t);
  const double exch = p.f * p.f + p.g * p.g;
  const double cp = std::cos((w.sum_ab + 2.0 * p.c) * t);
  const double sp = std::sin((w.sum_ab + 2.0 * p.c) * t);
  const double cm = std::cos((w.sum_ab - 2.0 * p.c) * t);
  const double sm = std::sin((w.sum_ab - 2.0 * p.c) * t);
  const double af_bg = state.alpha * p.f + state.beta * p.g;
  const double bf_ag = state.beta * p.f - state.alpha * p.g;

  const double term_a =
      -2.0 * std::cos(2.0 * p.c * t) * s1 *
      (std::sin(w.sum_ab * t) * af_bg + std::cos(w.sum_ab * t) * bf_ag);
  const double term_b =
      0.5 * (w.detuning * s1 *
                 ((state.gamma - 1.0) * sm - (state.gamma + 1.0) * sp) +
             (state.gamma + 1.0) * cp * cw - (state.gamma - 1.0) * cm * cw);
  const double term_c =
      2.0 * (w.detuning * af_bg * s1 * s1 - bf_ag * s1 * cw);
  const double term_d = 1.0 - 4.0 * exch * s1 * s1;
  return std::abs(term_a + term_b + term_c + term_d);
}

/// Bell quantity |E(A1,B1) - E(A1,B2) + E(A2,B1) + E(A2,B2)| with
/// A1 = q_z^Q, A2 = q_x^Q, B_j = A_j(t).
[[nodiscard]] inline double bell_quantity(const HamiltonianParams& p,
                                          const MediatorState& state, double t,
                                          Backend backend = Backend::numeric) {
  if (backend == Backend::closed_form) {
    return closed_form_general(p, state, t);
  }
  return bell_quantity(Propagator(build_hqm(p)), state, t);
}

/// Classical-mediator Bell value for f = g = 0 on equatorial states
/// (gamma = 0): B(t) = |2 + cos(2(a-c)t) + cos(2(a+c)t)| / 2. Bounded by 2.
[[nodiscard]] inline double closed_form_classical(const HamiltonianParams& p,
                                                  double t) {
  if (!p.classical()) {
    throw std::invalid_argument(
        "closed_form_classical: exchange couplings f, g must vanish");
  }
  return 0.5 * std::abs(2.0 + std::cos(2.0 * (p.a - p.c) * t) +
                        std::cos(2.0 * (p.a + p.c) * t));
}

/// Bell value for a mediator energy eigenstate (Bloch gamma = sign = +-1):
/// B = |cos((a+b+-2c)t) cos(Omega t) + 1 - 4(f^2+g^2) sin^2(Omega t)/Omega^2
///      - (a-b) sin((a+b+-2c)t) sin(Omega t)/Omega|. The middle term is the
/// stable spelling of ((a-b)^2 + 4(f^2+g^2)cos^2(Omega t))/Omega^2.
[[nodiscard]] inline double closed_form_eigenstate(const HamiltonianParams& p,
                                                   int sign, double t) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("closed_form_eigenstate: sign must be +1 or -1");
  }
  const OmegaParams w = omega_params(p);
  const double s1 = sin_over_omega(w.omega, t);
  const double cw = std::cos(w.omega * t);
  const double exch = p.f * p.f + p.g * p.g;
  const double arg = (w.sum_ab + 2.0 * sign * p.c) * t;
  return std::abs(std::cos(arg) * cw + 1.0 - 4.0 * exch * s1 * s1 -
                  w.detuning * std::sin(arg) * s1);
}

/// Maximally mixed mediator via the eigenstate average (B+ + B-)/2. The
/// average is taken after the absolute values, so it matches the correlator
/// pipeline only when the two pre-modulus sums share a sign; see the tests
/// for the measured domain of validity.
[[nodiscard]] inline double closed_form_mixed(const HamiltonianParams& p,
                                              double t) {
  return 0.5 *
         (closed_form_eigenstate(p, 1, t) + closed_form_eigenstate(p, -1, t));
}

/// B(t) sampled on a uniform time grid (endpoints included). max_value and
/// argmax_t describe the grid itself; no refinement is applied here.
struct BellTrace {
  HamiltonianParams params;
  MediatorState state;
  std::vector<double> times;
  std::vector<double> values;
  double max_value = 0.0;
  double argmax_t = 0.0;
};

}  // namespace tbell
