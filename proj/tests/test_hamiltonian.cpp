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

#include <catch2/catch_amalgamated.hpp>

#include "tbell/hamiltonian.hpp"
#include "tbell/verify.hpp"

using namespace tbell;

TEST_CASE("commuting Hamiltonian diagonals", "[hamiltonian]") {
  CHECK(max_abs(build_hcm({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}) -
                pauli_string(Axis::Z, Axis::I)) == 0.0);
  CHECK(max_abs(build_hcm({0.0, 0.0, 1.0, 0.0, 0.0, 0.0}) -
                pauli_string(Axis::Z, Axis::Z)) == 0.0);

  // a=1, b=2, c=3, r=4 entry by entry over (q, m) in {++, +-, -+, --}:
  //   ++ :  1 + 2 + 3 + 4 = 10
  //   +- :  1 - 2 - 3 + 4 =  0
  //   -+ : -1 + 2 - 3 + 4 =  2
  //   -- : -1 - 2 + 3 + 4 =  4
  const Matrix h = build_hcm({1.0, 2.0, 3.0, 0.0, 0.0, 4.0});
  CHECK(h(0, 0) == Complex(10.0, 0.0));
  CHECK(h(1, 1) == Complex(0.0, 0.0));
  CHECK(h(2, 2) == Complex(2.0, 0.0));
  CHECK(h(3, 3) == Complex(4.0, 0.0));
  CHECK(max_abs(h - Matrix(h.diagonal().asDiagonal())) == 0.0);
}

TEST_CASE("build_hcm rejects exchange couplings", "[hamiltonian]") {
  CHECK_THROWS_AS(build_hcm({0.0, 0.0, 0.0, 0.1, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_hcm({0.0, 0.0, 0.0, 0.0, -0.5, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("the two builders agree on the commuting sector", "[hamiltonian]") {
  // Independent constructions: build_hcm fills the diagonal, build_hqm sums
  // Pauli strings.
  ParamSampler draw(11);
  for (int i = 0; i < 100; ++i) {
    const HamiltonianParams p = draw.classical_params();
    CHECK(max_abs(build_hcm(p) - build_hqm(p)) < 1e-15);
  }
}

TEST_CASE("exchange terms occupy the middle block", "[hamiltonian]") {
  const Matrix hf = build_hqm({0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  CHECK(hf(1, 2) == Complex(2.0, 0.0));
  CHECK(hf(2, 1) == Complex(2.0, 0.0));
  CHECK(std::abs(hf(0, 0)) + std::abs(hf(3, 3)) + std::abs(hf(0, 3)) == 0.0);

  const Matrix hg = build_hqm({0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
  CHECK(hg(1, 2) == Complex(0.0, 2.0));
  CHECK(hg(2, 1) == Complex(0.0, -2.0));
}

TEST_CASE("build_hqm is Hermitian and linear in its coefficients",
          "[hamiltonian]") {
  ParamSampler draw(12);
  for (int i = 0; i < 100; ++i) {
    const HamiltonianParams p = draw.params();
    const Matrix h = build_hqm(p);
    CHECK(max_abs(h - h.adjoint()) < 1e-15);
  }

  // Finite differencing one coefficient at a time recovers the generator of
  // that coefficient; delta = 0.5 keeps every sum exactly representable.
  const HamiltonianParams base = draw.params();
  const double delta = 0.5;
  auto bump = [&base, delta](int which) {
    HamiltonianParams p = base;
    HamiltonianParams unit{};
    double* fields[6] = {&p.a, &p.b, &p.c, &p.f, &p.g, &p.r};
    double* unit_fields[6] = {&unit.a, &unit.b, &unit.c,
                              &unit.f, &unit.g, &unit.r};
    *fields[which] += delta;
    *unit_fields[which] = 1.0;
    return std::pair{p, unit};
  };
  for (int k = 0; k < 6; ++k) {
    const auto [bumped, unit] = bump(k);
    const Matrix diff = (build_hqm(bumped) - build_hqm(base)) / delta;
    CHECK(max_abs(diff - build_hqm(unit)) < 1e-12);
  }
}

TEST_CASE("total z polarization is conserved", "[hamiltonian]") {
  const Matrix& sigma = conserved_observable().realization;
  CHECK(is_hermitian(sigma));
  CHECK(sigma(0, 0) == Complex(2.0, 0.0));
  CHECK(sigma(1, 1) == Complex(0.0, 0.0));
  CHECK(sigma(2, 2) == Complex(0.0, 0.0));
  CHECK(sigma(3, 3) == Complex(-2.0, 0.0));

  CHECK(check_conservation(build_hcm({1.0, -2.0, 0.5, 0.0, 0.0, 3.0})) == 0.0);

  ParamSampler draw(13);
  for (int i = 0; i < 200; ++i) {
    CHECK(check_conservation(build_hqm(draw.params())) < 1e-13);
  }

  // A bare x observable on the probe is (maximally) non-conserved.
  CHECK(check_conservation(descriptor(Subsystem::Q, Axis::X).realization) ==
        Catch::Approx(2.0).margin(1e-12));
}
