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
//
// Independent reference implementations for the tests. Nothing here shares a
// code path with the library routines it checks.

#pragma once

#include <complex>

#include "tbell/pauli.hpp"
#include "tbell/verify.hpp"

namespace oracle {

using tbell::Complex;
using tbell::Matrix;

/// exp(-i h t) by scaling-and-squaring of the Taylor series; no spectral
/// decomposition involved, unlike the library route.
inline Matrix series_expm(const Matrix& h, double t) {
  const Matrix a = Complex(0.0, -t) * h;
  double norm = a.cwiseAbs().sum();
  int squarings = 0;
  double scale = 1.0;
  while (norm / scale > 0.5) {
    scale *= 2.0;
    ++squarings;
  }
  const Matrix b = a / scale;
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * b / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

/// Triple-loop matrix product, for checking algebra done through Eigen.
inline Matrix direct_product(const Matrix& x, const Matrix& y) {
  Matrix out = Matrix::Zero(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      for (Eigen::Index k = 0; k < x.cols(); ++k) {
        out(i, j) += x(i, k) * y(k, j);
      }
    }
  }
  return out;
}

/// Random density matrix rho = A A^dag / tr(A A^dag).
inline Matrix random_density(tbell::ParamSampler& draw, int dim) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = Complex(draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0));
    }
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace oracle
