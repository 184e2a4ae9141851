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

#include <algorithm>
#include <array>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tbell/bell.hpp"

namespace tbell {

/// A grid point's max_B counts as a violation only above this margin over the
/// classical bound 2; B(0) = 2 identically, so a bare "> 2" would be noise.
inline constexpr double k_violation_epsilon = 1e-9;

/// Absolute tolerance (in t) of the golden-section refinement.
inline constexpr double k_refine_tolerance = 1e-6;

struct TimeMaximum {
  double max_value;
  double argmax_t;
};

namespace detail {

/// Coarse scan over t_steps uniform grid points on [0, t_max] followed by a
/// golden-section polish of the bracket around the coarse argmax. Strictly-
/// greater comparisons keep the first attaining point among ties, and the
/// best evaluated sample is tracked throughout, so the result never falls
/// below the coarse scan.
template <typename F>
[[nodiscard]] TimeMaximum max_over_grid_refined(F&& value_at, double t_max,
                                                int t_steps) {
  if (t_steps < 2) {
    throw std::invalid_argument("max_over_grid_refined: need at least 2 steps");
  }
  if (t_max <= 0.0) {
    throw std::invalid_argument("max_over_grid_refined: t_max must be positive");
  }
  const double dt = t_max / (t_steps - 1);
  double best_t = 0.0;
  double best_v = value_at(0.0);
  int best_i = 0;
  for (int i = 1; i < t_steps; ++i) {
    const double t = i == t_steps - 1 ? t_max : i * dt;
    const double v = value_at(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
      best_i = i;
    }
  }

  double lo = std::max(0.0, (best_i - 1) * dt);
  double hi = std::min(t_max, (best_i + 1) * dt);
  constexpr double ratio = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  auto consider = [&](double t, double v) {
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  };
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = value_at(c);
  double fd = value_at(d);
  consider(c, fc);
  consider(d, fd);
  while (hi - lo > k_refine_tolerance) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = value_at(c);
      consider(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = value_at(d);
      consider(d, fd);
    }
  }
  return {best_v, best_t};
}

}  // namespace detail

/// Largest B over t in [0, t_max]: coarse grid plus local refinement.
[[nodiscard]] inline TimeMaximum max_over_time(
    const HamiltonianParams& p, const MediatorState& state, double t_max,
    int t_steps, Backend backend = Backend::numeric) {
  if (backend == Backend::closed_form) {
    return detail::max_over_grid_refined(
        [&](double t) { return closed_form_general(p, state, t); }, t_max,
        t_steps);
  }
  const Propagator prop(build_hqm(p));
  return detail::max_over_grid_refined(
      [&](double t) { return bell_quantity(prop, state, t); }, t_max, t_steps);
}

/// Coupling-plane sweep configuration. Fixed carries a, b, c, r; f and g are
/// overwritten per grid point.
struct SweepConfig {
  std::array<double, 2> f_range{-2.0, 2.0};
  std::array<double, 2> g_range{-2.0, 2.0};
  int grid_n = 41;
  double t_max = 2.0 * std::numbers::pi;
  int t_steps = 629;
  HamiltonianParams fixed{0.0, 0.0, 1.0, 0.0, 0.0, 0.0};
  MediatorState state = MediatorState::y_plus();
  Backend backend = Backend::numeric;
  int threads = 1;
};

struct SweepPoint {
  double f;
  double g;
  double max_value;
  double argmax_t;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepPoint> grid;  // row-major, ordered by (f index, g index)
  double violation_fraction = 0.0;
  SweepPoint global_max{};
};

/// Evaluate max_over_time on an n x n (f, g) grid. Output is identical for
/// any thread count: every point owns a preallocated slot and the reduction
/// runs serially afterwards.
[[nodiscard]] inline SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.grid_n < 2) {
    throw std::invalid_argument("run_sweep: grid_n must be at least 2");
  }
  if (cfg.f_range[0] > cfg.f_range[1] || cfg.g_range[0] > cfg.g_range[1]) {
    throw std::invalid_argument("run_sweep: ranges must be ordered lo <= hi");
  }
  SweepResult result;
  result.config = cfg;
  const int n = cfg.grid_n;
  result.grid.resize(static_cast<std::size_t>(n) * n);

  auto coord = [n](const std::array<double, 2>& range, int i) {
    return range[0] + (range[1] - range[0]) * i / (n - 1);
  };
  auto fill_row = [&](int i) {
    HamiltonianParams p = cfg.fixed;
    p.f = coord(cfg.f_range, i);
    for (int j = 0; j < n; ++j) {
      p.g = coord(cfg.g_range, j);
      const TimeMaximum tm =
          max_over_time(p, cfg.state, cfg.t_max, cfg.t_steps, cfg.backend);
      result.grid[static_cast<std::size_t>(i) * n + j] = {p.f, p.g,
                                                          tm.max_value,
                                                          tm.argmax_t};
    }
  };

  const int threads = std::clamp(
      cfg.threads, 1,
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] {
        for (int i = k; i < n; i += threads) fill_row(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  int violations = 0;
  result.global_max = result.grid.front();
  for (const SweepPoint& pt : result.grid) {
    if (pt.max_value > 2.0 + k_violation_epsilon) ++violations;
    if (pt.max_value > result.global_max.max_value) result.global_max = pt;
  }
  result.violation_fraction =
      static_cast<double>(violations) / static_cast<double>(result.grid.size());
  return result;
}

/// B(t) on a uniform grid; the trace reports the raw grid maximum (first
/// attaining point), with no refinement, so rows and summary agree exactly.
[[nodiscard]] inline BellTrace trace_curve(const HamiltonianParams& p,
                                           const MediatorState& state,
                                           double t_max, int t_steps,
                                           Backend backend = Backend::numeric) {
  if (t_steps < 2) {
    throw std::invalid_argument("trace_curve: need at least 2 steps");
  }
  if (t_max <= 0.0) {
    throw std::invalid_argument("trace_curve: t_max must be positive");
  }
  BellTrace trace;
  trace.params = p;
  trace.state = state;
  trace.times.reserve(t_steps);
  trace.values.reserve(t_steps);
  const double dt = t_max / (t_steps - 1);
  const Propagator prop(build_hqm(p));
  for (int i = 0; i < t_steps; ++i) {
    const double t = i == t_steps - 1 ? t_max : i * dt;
    const double v = backend == Backend::closed_form
                         ? closed_form_general(p, state, t)
                         : bell_quantity(prop, state, t);
    trace.times.push_back(t);
    trace.values.push_back(v);
    if (v > trace.max_value) {
      trace.max_value = v;
      trace.argmax_t = t;
    }
  }
  return trace;
}

}  // namespace tbell
