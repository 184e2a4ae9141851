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
#include <variant>

#include "tbell/bell.hpp"
#include "tbell/hamiltonian.hpp"
#include "tbell/heisenberg.hpp"
#include "tbell/pauli.hpp"

namespace tbell {

/// Register wires in tensor order (M, Q, A): basis index = 4m + 2q + a.
enum class Wire { M = 0, Q = 1, A = 2 };

/// Single-qubit pulse exp(-i (theta/2)(cos(phi) sigma_x + sin(phi) sigma_y)).
/// Angles in radians; theta = 0 is the identity pulse.
struct Rotation {
  double theta = 0.0;
  double phi = 0.0;
};

[[nodiscard]] inline Matrix rotation_matrix(const Rotation& r) {
  const Matrix axis =
      std::cos(r.phi) * pauli(Axis::X) + std::sin(r.phi) * pauli(Axis::Y);
  return hermitian_expm(axis, r.theta / 2.0);
}

/// Bloch vector of R|0>, for handing a circuit preparation to the operator
/// pipeline.
[[nodiscard]] inline MediatorState prep_state(const Rotation& r) {
  static const Matrix ket0 =
      (Matrix(2, 2) << 1.0, 0.0, 0.0, 0.0).finished();
  const Matrix u = rotation_matrix(r);
  const Matrix rho = u * ket0 * u.adjoint();
  return MediatorState::bloch((pauli(Axis::X) * rho).trace().real(),
                              (pauli(Axis::Y) * rho).trace().real(),
                              (pauli(Axis::Z) * rho).trace().real());
}

struct RotationGate {
  Rotation rotation;
  Wire target;
};
struct HadamardGate {
  Wire target;
};
struct CnotGate {
  Wire control;
  Wire target;
};
/// Joint mediator-probe evolution exp(-i H t) on wires (M, Q).
struct MixingGate {
  HamiltonianParams params;
  double t = 0.0;
};
/// Marker for the terminal ancilla measurement; acts as the identity when
/// applied as a gate (the runner extracts <sigma_z^A> itself).
struct AncillaReadout {};

using GateOp =
    std::variant<RotationGate, HadamardGate, CnotGate, MixingGate,
                 AncillaReadout>;

/// Full register density matrix (8x8), wires ordered (M, Q, A).
struct ThreeQubitState {
  Matrix rho;
};

namespace circuit_detail {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[nodiscard]] inline Matrix lift_single(const Matrix& op, Wire target) {
  const Matrix& id = pauli(Axis::I);
  const int pos = static_cast<int>(target);
  Matrix out = tensor(pos == 0 ? op : id, pos == 1 ? op : id);
  return tensor(out, pos == 2 ? op : id);
}

[[nodiscard]] inline Matrix cnot_matrix(Wire control, Wire target) {
  if (control == target) {
    throw std::invalid_argument("cnot: control and target must differ");
  }
  const int control_bit = 2 - static_cast<int>(control);
  const int target_bit = 2 - static_cast<int>(target);
  Matrix u = Matrix::Zero(8, 8);
  for (int s = 0; s < 8; ++s) {
    const int dest = (s >> control_bit & 1) != 0 ? s ^ (1 << target_bit) : s;
    u(dest, s) = 1.0;
  }
  return u;
}

/// The mixing Hamiltonian is built on the (Q, M)-ordered hybrid space; the
/// register orders (M, Q), so conjugate by the factor swap before lifting.
[[nodiscard]] inline Matrix mixing_matrix(const HamiltonianParams& p,
                                          double t) {
  static const Matrix swap_qm =
      (Matrix(4, 4) << 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0,
       0.0, 0.0, 0.0, 0.0, 1.0)
          .finished();
  const Matrix h_mq = swap_qm * build_hqm(p) * swap_qm;
  return tensor(hermitian_expm(h_mq, t), pauli(Axis::I));
}

[[nodiscard]] inline const Matrix& hadamard() {
  static const Matrix h =
      ((Matrix(2, 2) << 1.0, 1.0, 1.0, -1.0).finished() / std::sqrt(2.0));
  return h;
}

}  // namespace circuit_detail

/// Unitary realization of one gate on the full register.
[[nodiscard]] inline Matrix gate_matrix(const GateOp& gate) {
  using namespace circuit_detail;
  return std::visit(
      Overloaded{
          [](const RotationGate& g) -> Matrix {
            return lift_single(rotation_matrix(g.rotation), g.target);
          },
          [](const HadamardGate& g) -> Matrix {
            return lift_single(hadamard(), g.target);
          },
          [](const CnotGate& g) -> Matrix {
            return cnot_matrix(g.control, g.target);
          },
          [](const MixingGate& g) -> Matrix {
            return mixing_matrix(g.params, g.t);
          },
          [](const AncillaReadout&) -> Matrix {
            return Matrix::Identity(8, 8);
          },
      },
      gate);
}

[[nodiscard]] inline ThreeQubitState apply_gate(const ThreeQubitState& state,
                                                const GateOp& gate) {
  if (state.rho.rows() != 8 || state.rho.cols() != 8) {
    throw std::invalid_argument("apply_gate: state must be 8x8");
  }
  const Matrix u = gate_matrix(gate);
  return {u * state.rho * u.adjoint()};
}

/// rho_0 = (R|0><0|R^dag)_M x (I/2)_Q x (|0><0|)_A.
[[nodiscard]] inline ThreeQubitState prepare_initial(const Rotation& prep) {
  static const Matrix ket0 =
      (Matrix(2, 2) << 1.0, 0.0, 0.0, 0.0).finished();
  const Matrix u = rotation_matrix(prep);
  const Matrix rho_m = u * ket0 * u.adjoint();
  return {tensor(tensor(rho_m, 0.5 * pauli(Axis::I)), ket0)};
}

/// One measurement run of the ancilla-recording protocol.
struct ProtocolSpec {
  ProbeAxis first_basis = ProbeAxis::Z;
  ProbeAxis second_basis = ProbeAxis::Z;
  Rotation mediator_prep{};
  HamiltonianParams params{};
  double t = 0.0;
  /// Per-pulse-stage contraction factor in [0, 1]; 1 = ideal hardware.
  double damping = 1.0;
};

/// The t = 0 (Z, Z) protocol returns exactly +1 at damping = 1, so readout
/// values need no rescaling; kept explicit for the record.
inline constexpr double k_readout_normalization = 1.0;

/// Execute one protocol: prepare, record the first basis onto the ancilla,
/// mix, record the second basis, read <sigma_z^A>. Four pulse stages
/// (preparation, two recordings, mixing) each contract the signal by the
/// damping factor; the stage count is basis-independent so damping rescales
/// every correlator identically.
[[nodiscard]] inline double run_protocol(const ProtocolSpec& spec) {
  if (spec.damping < 0.0 || spec.damping > 1.0) {
    throw std::invalid_argument("run_protocol: damping must lie in [0, 1]");
  }
  ThreeQubitState st = prepare_initial(spec.mediator_prep);
  auto record = [&st](ProbeAxis basis) {
    if (basis == ProbeAxis::X) {
      st = apply_gate(st, HadamardGate{Wire::Q});
      st = apply_gate(st, CnotGate{Wire::Q, Wire::A});
      st = apply_gate(st, HadamardGate{Wire::Q});
    } else {
      st = apply_gate(st, CnotGate{Wire::Q, Wire::A});
    }
  };
  record(spec.first_basis);
  st = apply_gate(st, MixingGate{spec.params, spec.t});
  record(spec.second_basis);
  const double readout =
      (circuit_detail::lift_single(pauli(Axis::Z), Wire::A) * st.rho)
          .trace()
          .real();
  constexpr int stages = 4;  // prep + recording + mixing + recording
  return k_readout_normalization * std::pow(spec.damping, stages) * readout;
}

/// Four protocol runs combined into the Bell quantity at one time.
struct CircuitBellPoint {
  double t;
  double e_zz;
  double e_zx;
  double e_xz;
  double e_xx;
  double bell;
  int protocol_runs;
};

[[nodiscard]] inline CircuitBellPoint bell_from_circuit(
    const HamiltonianParams& p, const Rotation& prep, double t,
    double damping = 1.0) {
  int runs = 0;
  auto corr = [&](ProbeAxis b1, ProbeAxis b2) {
    ++runs;
    return run_protocol({b1, b2, prep, p, t, damping});
  };
  const double e_zz = corr(ProbeAxis::Z, ProbeAxis::Z);
  const double e_zx = corr(ProbeAxis::Z, ProbeAxis::X);
  const double e_xz = corr(ProbeAxis::X, ProbeAxis::Z);
  const double e_xx = corr(ProbeAxis::X, ProbeAxis::X);
  return {t,    e_zz, e_zx, e_xz, e_xx, std::abs(e_zz - e_zx + e_xz + e_xx),
          runs};
}

}  // namespace tbell
