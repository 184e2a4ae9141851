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

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tbell/bell.hpp"
#include "tbell/circuit.hpp"
#include "tbell/sweep.hpp"

namespace tbell::io {

/// Shortest representation that round-trips a double exactly.
[[nodiscard]] inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[nodiscard]] inline nlohmann::json params_json(const HamiltonianParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c},
          {"f", p.f}, {"g", p.g}, {"r", p.r}};
}

[[nodiscard]] inline nlohmann::json state_json(const MediatorState& s) {
  return {{"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}};
}

[[nodiscard]] inline const char* backend_name(Backend b) {
  return b == Backend::numeric ? "numeric" : "closed";
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "f,g,max_B,argmax_t\n";
  for (const SweepPoint& pt : result.grid) {
    os << format_double(pt.f) << ',' << format_double(pt.g) << ','
       << format_double(pt.max_value) << ',' << format_double(pt.argmax_t)
       << '\n';
  }
}

[[nodiscard]] inline nlohmann::json sweep_summary(const SweepResult& result) {
  const SweepConfig& cfg = result.config;
  return {
      {"config",
       {{"f_range", {cfg.f_range[0], cfg.f_range[1]}},
        {"g_range", {cfg.g_range[0], cfg.g_range[1]}},
        {"grid_n", cfg.grid_n},
        {"t_max", cfg.t_max},
        {"t_steps", cfg.t_steps},
        {"params", params_json(cfg.fixed)},
        {"state", state_json(cfg.state)},
        {"backend", backend_name(cfg.backend)}}},
      {"global_max",
       {{"f", result.global_max.f},
        {"g", result.global_max.g},
        {"max_B", result.global_max.max_value},
        {"argmax_t", result.global_max.argmax_t}}},
      {"violation_fraction", result.violation_fraction},
      {"violation_threshold", 2.0 + k_violation_epsilon},
  };
}

[[nodiscard]] inline nlohmann::json sweep_json(const SweepResult& result) {
  nlohmann::json j = sweep_summary(result);
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepPoint& pt : result.grid) {
    rows.push_back({pt.f, pt.g, pt.max_value, pt.argmax_t});
  }
  j["columns"] = {"f", "g", "max_B", "argmax_t"};
  j["grid"] = std::move(rows);
  return j;
}

inline void write_trace_csv(std::ostream& os, const BellTrace& trace) {
  os << "t,B\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    os << format_double(trace.times[i]) << ','
       << format_double(trace.values[i]) << '\n';
  }
}

[[nodiscard]] inline nlohmann::json trace_json(const BellTrace& trace) {
  return {
      {"params", params_json(trace.params)},
      {"state", state_json(trace.state)},
      {"times", trace.times},
      {"values", trace.values},
      {"max_B", trace.max_value},
      {"argmax_t", trace.argmax_t},
  };
}

inline void write_circuit_csv(std::ostream& os,
                              const std::vector<CircuitBellPoint>& rows) {
  os << "t,E_zz,E_zx,E_xz,E_xx,B\n";
  for (const CircuitBellPoint& r : rows) {
    os << format_double(r.t) << ',' << format_double(r.e_zz) << ','
       << format_double(r.e_zx) << ',' << format_double(r.e_xz) << ','
       << format_double(r.e_xx) << ',' << format_double(r.bell) << '\n';
  }
}

/// Single-pair circuit output (one basis combination).
inline void write_pair_csv(std::ostream& os,
                           const std::vector<std::pair<double, double>>& rows) {
  os << "t,E\n";
  for (const auto& [t, e] : rows) {
    os << format_double(t) << ',' << format_double(e) << '\n';
  }
}

[[nodiscard]] inline nlohmann::json circuit_json(
    const std::vector<CircuitBellPoint>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CircuitBellPoint& r : rows) {
    arr.push_back({{"t", r.t},
                   {"E_zz", r.e_zz},
                   {"E_zx", r.e_zx},
                   {"E_xz", r.e_xz},
                   {"E_xx", r.e_xx},
                   {"B", r.bell},
                   {"protocol_runs", r.protocol_runs}});
  }
  return {{"rows", std::move(arr)}};
}

}  // namespace tbell::io
