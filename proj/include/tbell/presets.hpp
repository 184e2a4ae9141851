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

#include <array>
#include <numbers>
#include <string_view>

#include "tbell/bell.hpp"
#include "tbell/circuit.hpp"

namespace tbell {

/// A named scenario: Hamiltonian, circuit preparation pulse, and the
/// equivalent Bloch state for the operator pipeline.
struct ScenarioPreset {
  std::string_view name;
  HamiltonianParams params;
  Rotation mediator_prep;
  MediatorState state;
  std::string_view description;
};

/// The four reference scenarios: commuting vs exchange mixing, mediator left
/// in |0> vs rotated by a 90-degree x pulse (Bloch (0, -1, 0)).
[[nodiscard]] inline const std::array<ScenarioPreset, 4>& scenario_presets() {
  constexpr double quarter = std::numbers::pi / 2.0;
  static const std::array<ScenarioPreset, 4> presets{{
      {"fig4a-classicalH",
       {0.0, 0.0, 1.0, 0.0, 0.0, 0.0},
       {},
       MediatorState::z_plus(),
       "commuting mixing (c = 1), mediator |0>"},
      {"fig4a-quantumH",
       {0.0, 0.0, 1.0, 1.0, 0.0, 0.0},
       {},
       MediatorState::z_plus(),
       "exchange mixing (c = f = 1), mediator |0>"},
      {"fig4b-classicalH",
       {0.0, 0.0, 1.0, 0.0, 0.0, 0.0},
       {quarter, 0.0},
       MediatorState::y_minus(),
       "commuting mixing (c = 1), mediator rotated 90x"},
      {"fig4b-quantumH",
       {0.0, 0.0, 1.0, 1.0, 0.0, 0.0},
       {quarter, 0.0},
       MediatorState::y_minus(),
       "exchange mixing (c = f = 1), mediator rotated 90x"},
  }};
  return presets;
}

[[nodiscard]] inline const ScenarioPreset* find_preset(std::string_view name) {
  for (const ScenarioPreset& preset : scenario_presets()) {
    if (preset.name == name) return &preset;
  }
  return nullptr;
}

}  // namespace tbell
