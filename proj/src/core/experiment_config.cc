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

#include "a2d2e/core/experiment_config.h"

#include <cmath>
#include <string>

#include "a2d2e/core/errors.h"

namespace a2d2e {

std::string DependenceName(DependenceLevel level) {
  switch (level) {
    case DependenceLevel::kIndependent:
      return "independent";
    case DependenceLevel::kLow:
      return "low";
    case DependenceLevel::kHigh:
      return "high";
  }
  return "unknown";
}

DependenceLevel ParseDependence(std::string_view name) {
  if (name == "independent") return DependenceLevel::kIndependent;
  if (name == "low") return DependenceLevel::kLow;
  if (name == "high") return DependenceLevel::kHigh;
  throw InvalidArgumentError("unknown dependence level '" + std::string(name) +
                             "' (expected independent, low or high)");
}

void ExperimentConfig::Validate() const {
  if (function_name.empty()) {
    throw InvalidArgumentError("function_name must not be empty");
  }
  if (k < 1) throw InvalidArgumentError("k must be at least 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidArgumentError("delta must be positive and finite");
  }
  if (!(noise_fraction >= 0.0 && noise_fraction < 1.0)) {
    throw InvalidArgumentError("noise_fraction must lie in [0, 1)");
  }
  if (grid_size < 2) throw InvalidArgumentError("grid_size must be at least 2");
}

nlohmann::json ToJson(const ExperimentConfig& config) {
  return nlohmann::json{
      {"function_name", config.function_name},
      {"dependence_level", DependenceName(config.dependence_level)},
      {"n", config.n},
      {"k", config.k},
      {"delta", config.delta},
      {"noise_fraction", config.noise_fraction},
      {"seed", config.seed},
      {"grid_size", config.grid_size},
      {"repetitions", config.repetitions},
  };
}

namespace {

template <typename T>
T Read(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError("config field '" + key + "': " + e.what());
  }
}

std::size_t ReadCount(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw InvalidArgumentError("config field '" + key +
                               "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& json) {
  if (!json.is_object()) {
    throw InvalidArgumentError("experiment config must be a JSON object");
  }
  ExperimentConfig config;
  for (const auto& [key, value] : json.items()) {
    if (key == "function_name") {
      config.function_name = Read<std::string>(value, key);
    } else if (key == "dependence_level") {
      config.dependence_level = ParseDependence(Read<std::string>(value, key));
    } else if (key == "n") {
      config.n = ReadCount(value, key);
    } else if (key == "k") {
      config.k = ReadCount(value, key);
    } else if (key == "delta") {
      config.delta = Read<double>(value, key);
    } else if (key == "noise_fraction") {
      config.noise_fraction = Read<double>(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        throw InvalidArgumentError("config field 'seed' must be unsigned");
      }
      config.seed = value.get<std::uint64_t>();
    } else if (key == "grid_size") {
      config.grid_size = ReadCount(value, key);
    } else if (key == "repetitions") {
      config.repetitions = ReadCount(value, key);
    } else {
      throw InvalidArgumentError("unknown config key '" + key + "'");
    }
  }
  config.Validate();
  return config;
}

}  // namespace a2d2e
