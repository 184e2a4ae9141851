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
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tbell/bell.hpp"
#include "tbell/circuit.hpp"
#include "tbell/hamiltonian.hpp"
#include "tbell/heisenberg.hpp"
#include "tbell/pauli.hpp"

namespace tbell {

/// Deterministic draws for the randomized suites. Same seed, same platform,
/// same stream: repeat runs are bit-identical.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  [[nodiscard]] double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  /// All six coefficients uniform in [-span, span].
  [[nodiscard]] HamiltonianParams params(double span = 2.0) {
    return {uniform(-span, span), uniform(-span, span), uniform(-span, span),
            uniform(-span, span), uniform(-span, span), uniform(-span, span)};
  }

  /// Classical coefficients (f = g = 0), the rest uniform in [-span, span].
  [[nodiscard]] HamiltonianParams classical_params(double span = 2.0) {
    return {uniform(-span, span), uniform(-span, span), uniform(-span, span),
            0.0, 0.0, uniform(-span, span)};
  }

  /// Uniform over the solid Bloch ball.
  [[nodiscard]] MediatorState state() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double x = gauss(rng_), y = gauss(rng_), z = gauss(rng_);
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) return MediatorState::maximally_mixed();
    const double radius = std::cbrt(uniform(0.0, 1.0));
    return MediatorState::bloch(radius * x / norm, radius * y / norm,
                                radius * z / norm);
  }

  [[nodiscard]] double time(double t_max = 2.0 * std::numbers::pi) {
    return uniform(0.0, t_max);
  }

  /// Random Hermitian 4x4 with entries of order one.
  [[nodiscard]] Matrix hermitian4() {
    Matrix a(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        a(i, j) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      }
    }
    return 0.5 * (a + a.adjoint()).eval();
  }

 private:
  std::mt19937_64 rng_;
};

/// Outcome of one verification suite. For equivalence suites max_error is the
/// worst absolute deviation; for bound suites it is the worst excess over the
/// bound (clamped at zero).
struct SuiteResult {
  std::string name;
  int checks = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

namespace verify_detail {

inline void finish(SuiteResult& r, std::optional<double> tol_override) {
  if (tol_override) r.tolerance = *tol_override;
  r.passed = r.max_error <= r.tolerance;
}

inline void track(SuiteResult& r, double err) {
  ++r.checks;
  if (err > r.max_error) r.max_error = err;
}

[[nodiscard]] inline SuiteResult suite_pauli_algebra(
    std::optional<double> tol) {
  SuiteResult r{.name = "pauli-algebra", .tolerance = 1e-14};
  const Axis axes[] = {Axis::X, Axis::Y, Axis::Z};
  for (Axis p : axes) {
    for (Axis q : axes) {
      const Matrix anti = pauli(p) * pauli(q) + pauli(q) * pauli(p);
      const Matrix expect =
          p == q ? Matrix(2.0 * Matrix::Identity(2, 2)) : Matrix(Matrix::Zero(2, 2));
      track(r, max_abs(anti - expect));
    }
  }
  for (Subsystem s : {Subsystem::Q, Subsystem::M}) {
    for (Axis ax : axes) {
      const Matrix& d = descriptor(s, ax).realization;
      track(r, max_abs(d * d - Matrix::Identity(4, 4)));
      track(r, std::abs(d.trace()));
    }
  }
  verify_detail::finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_expm_semigroup(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "expm-semigroup", .tolerance = 1e-10};
  for (int i = 0; i < 50; ++i) {
    const Matrix h = draw.hermitian4();
    const double s = draw.uniform(-10.0, 10.0);
    const double t = draw.uniform(-10.0, 10.0);
    const Matrix u_s = hermitian_expm(h, s);
    const Matrix u_t = hermitian_expm(h, t);
    track(r, max_abs(u_s * u_t - hermitian_expm(h, s + t)));
    track(r, max_abs(u_s.adjoint() * u_s - Matrix::Identity(4, 4)));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_conservation(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "conservation", .tolerance = 1e-13};
  for (int i = 0; i < 1000; ++i) {
    track(r, check_conservation(build_hqm(draw.params())));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_heisenberg_closed_forms(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "heisenberg-closed-forms", .tolerance = 1e-9};
  for (int i = 0; i < 1000; ++i) {
    const HamiltonianParams p = draw.params();
    const double t = draw.time();
    const Propagator prop(build_hqm(p));
    track(r, max_abs(closed_form_qz(p, t).realization -
                     prop.conjugate(detail::strings().zi, t)));
    track(r, max_abs(closed_form_qx(p, t).realization -
                     prop.conjugate(detail::strings().xi, t)));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_bell_closed_forms(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "bell-closed-forms", .tolerance = 1e-9};
  for (int i = 0; i < 1000; ++i) {
    const HamiltonianParams p = draw.params();
    const double t = draw.time();
    const MediatorState s = draw.state();
    const Propagator prop(build_hqm(p));
    track(r, std::abs(closed_form_general(p, s, t) -
                      bell_quantity(prop, s, t)));
    const int sign = i % 2 == 0 ? 1 : -1;
    track(r, std::abs(closed_form_eigenstate(p, sign, t) -
                      bell_quantity(prop, MediatorState::classical(sign), t)));
  }
  for (int i = 0; i < 500; ++i) {
    HamiltonianParams p = draw.classical_params();
    const double t = draw.time();
    // classical closed form matches the pipeline on equatorial states
    const double angle = draw.uniform(0.0, 2.0 * std::numbers::pi);
    const MediatorState s =
        MediatorState::bloch(std::cos(angle), std::sin(angle), 0.0);
    track(r, std::abs(closed_form_classical(p, t) -
                      bell_quantity(p, s, t)));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_classical_mediator_bound(
    ParamSampler& draw, std::optional<double> tol, int draws = 10000) {
  SuiteResult r{.name = "classical-mediator-bound", .tolerance = 1e-9};
  for (int i = 0; i < draws; ++i) {
    const HamiltonianParams p = draw.classical_params();
    const double b = bell_quantity(p, draw.state(), draw.time());
    track(r, std::max(0.0, b - 2.0));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_classical_state_bound(
    ParamSampler& draw, std::optional<double> tol, int draws = 10000) {
  SuiteResult r{.name = "classical-state-bound", .tolerance = 1e-9};
  for (int i = 0; i < draws; ++i) {
    const HamiltonianParams p = draw.params();
    const MediatorState s =
        MediatorState::classical(draw.uniform(-1.0, 1.0));
    track(r, std::max(0.0, bell_quantity(p, s, draw.time()) - 2.0));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_tsirelson_ceiling(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "tsirelson-ceiling", .tolerance = 1e-9};
  const double ceiling = 2.0 * std::numbers::sqrt2;
  for (int i = 0; i < 2000; ++i) {
    const double b =
        bell_quantity(draw.params(5.0), draw.state(), draw.time());
    track(r, std::max(0.0, b - ceiling));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_circuit_operator(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "circuit-operator", .tolerance = 1e-9};
  for (int i = 0; i < 200; ++i) {
    const Rotation prep{draw.uniform(0.0, std::numbers::pi),
                        draw.uniform(0.0, 2.0 * std::numbers::pi)};
    const ProtocolSpec spec{
        i % 2 == 0 ? ProbeAxis::Z : ProbeAxis::X,
        i % 4 < 2 ? ProbeAxis::Z : ProbeAxis::X,
        prep,
        draw.params(),
        draw.time(),
        1.0,
    };
    const MediatorState s = prep_state(prep);
    const Propagator prop(build_hqm(spec.params));
    const auto& early = spec.first_basis == ProbeAxis::Z
                            ? detail::strings().zi
                            : detail::strings().xi;
    const auto& late_base = spec.second_basis == ProbeAxis::Z
                                ? detail::strings().zi
                                : detail::strings().xi;
    const double expected =
        correlator(early, prop.conjugate(late_base, spec.t), s);
    track(r, std::abs(run_protocol(spec) - expected));
  }
  for (int i = 0; i < 50; ++i) {
    const Rotation prep{draw.uniform(0.0, std::numbers::pi),
                        draw.uniform(0.0, 2.0 * std::numbers::pi)};
    const HamiltonianParams p = draw.params();
    const double t = draw.time();
    const CircuitBellPoint pt = bell_from_circuit(p, prep, t);
    track(r, std::abs(pt.bell - bell_quantity(p, prep_state(prep), t)));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_anchors(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "t0-anchors", .tolerance = 1e-12};
  for (int i = 0; i < 100; ++i) {
    track(r, std::abs(bell_quantity(draw.params(), draw.state(), 0.0) - 2.0));
  }
  const auto& s = detail::strings();
  for (int i = 0; i < 20; ++i) {
    const MediatorState st = draw.state();
    track(r, std::abs(correlator(s.zi, s.zi, st) - 1.0));
    track(r, std::abs(correlator(s.zi, s.xi, st)));
  }
  finish(r, tol);
  return r;
}

[[nodiscard]] inline SuiteResult suite_r_invariance(
    ParamSampler& draw, std::optional<double> tol) {
  SuiteResult r{.name = "r-invariance", .tolerance = 1e-12};
  for (int i = 0; i < 200; ++i) {
    HamiltonianParams p = draw.params();
    const MediatorState s = draw.state();
    const double t = draw.time();
    const double base = bell_quantity(p, s, t);
    p.r += draw.uniform(-10.0, 10.0);
    track(r, std::abs(bell_quantity(p, s, t) - base));
  }
  finish(r, tol);
  return r;
}

}  // namespace verify_detail

/// Run every verification suite with one seeded sampler. The optional
/// tolerance override replaces each suite's own tolerance (useful for probing
/// how much margin the checks have).
[[nodiscard]] inline std::vector<SuiteResult> run_verification(
    std::uint64_t seed, std::optional<double> tol_override = std::nullopt) {
  using namespace verify_detail;
  ParamSampler draw(seed);
  std::vector<SuiteResult> results;
  results.push_back(suite_pauli_algebra(tol_override));
  results.push_back(suite_expm_semigroup(draw, tol_override));
  results.push_back(suite_conservation(draw, tol_override));
  results.push_back(suite_heisenberg_closed_forms(draw, tol_override));
  results.push_back(suite_bell_closed_forms(draw, tol_override));
  results.push_back(suite_classical_mediator_bound(draw, tol_override));
  results.push_back(suite_classical_state_bound(draw, tol_override));
  results.push_back(suite_tsirelson_ceiling(draw, tol_override));
  results.push_back(suite_circuit_operator(draw, tol_override));
  results.push_back(suite_anchors(draw, tol_override));
  results.push_back(suite_r_invariance(draw, tol_override));
  return results;
}

[[nodiscard]] inline bool all_passed(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace tbell
