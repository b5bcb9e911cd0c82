/*
 * Copyright 2026 The A2D2E Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef A2D2E_CORE_EXPERIMENT_CONFIG_H_
#define A2D2E_CORE_EXPERIMENT_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace a2d2e {

enum class DependenceLevel { kIndependent, kLow, kHigh };

std::string DependenceName(DependenceLevel level);
DependenceLevel ParseDependence(std::string_view name);

struct ExperimentConfig {
  std::string function_name = "simple-1";
  DependenceLevel dependence_level = DependenceLevel::kIndependent;
  // Sample count; 0 selects 100 x D of the chosen function.
  std::size_t n = 0;
  std::size_t k = 40;
  double delta = 0.01;
  double noise_fraction = 0.10;
  std::uint64_t seed = 0;
  std::size_t grid_size = 100;
  std::size_t repetitions = 10;

  // Throws InvalidArgumentError when an invariant is violated.
  void Validate() const;
  // n, or 100 * dims when n == 0.
  std::size_t ResolvedSampleCount(std::size_t dims) const {
    return n == 0 ? 100 * dims : n;
  }

  bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json ToJson(const ExperimentConfig& config);
// Every field is optional (defaults apply); unknown keys and type mismatches
// are rejected with InvalidArgumentError.
ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& json);

}  // namespace a2d2e

#endif  // A2D2E_CORE_EXPERIMENT_CONFIG_H_
