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

// Monte Carlo checks of the bin-increment variance formulas. A linear model
// is probed at fixed points inside a single bin [0, width] of variable 0,
// with fresh additive Gaussian noise on every query, so the noise is the only
// source of error in the increment.

#ifndef A2D2E_EVALUATION_VARIANCE_EXPERIMENTS_H_
#define A2D2E_EVALUATION_VARIANCE_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a2d2e/core/effect_curve.h"
#include "json.hpp"

namespace a2d2e {

struct VarianceReport {
  Method kind = Method::kAle;
  std::size_t dims = 0;
  double sigma = 0.0;
  std::size_t count = 0;
  double width = 0.0;
  double delta = 0.0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  double mean_increment = 0.0;
  double true_increment = 0.0;
  double empirical_variance = 0.0;
  double theoretical_variance = 0.0;
  // |empirical - theoretical| / theoretical; 0 when both vanish.
  double relative_error = 0.0;
};

inline constexpr std::size_t kMinVarianceReplicates = 500;

// Throws InvalidArgumentError for kinds other than ALE/A2D2E, fewer than
// kMinVarianceReplicates replicates, or invalid geometry (including a design
// dimension above the cap).
VarianceReport RunVarianceExperiment(Method kind, std::size_t dims,
                                     double sigma, std::size_t count,
                                     double width, double delta,
                                     std::size_t replicates,
                                     std::uint64_t seed);

nlohmann::ordered_json ToJson(const VarianceReport& report);

struct ConsistencyOptions {
  std::size_t dims = 2;
  double sigma = 0.1;
  double width = 0.05;
  double delta = 0.01;
};

struct ConsistencyRow {
  std::size_t count = 0;
  double std_dev = 0.0;
  // Set instead of std_dev when the statistic is undefined.
  std::optional<std::string> error;
};

struct ConsistencyReport {
  ConsistencyOptions options;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::vector<ConsistencyRow> rows;
  // std(count_i) / std(count_{i+1}) for consecutive rows; empty when either
  // side is undefined or the denominator is zero.
  std::vector<std::optional<double>> ratios;
};

// Standard deviation of the A2D2E increment over `replicates` noise draws
// for each bin count. Counts must be positive and strictly increasing.
ConsistencyReport RunConsistencyExperiment(
    std::span<const std::size_t> counts, std::size_t replicates,
    std::uint64_t seed, const ConsistencyOptions& options = {});

nlohmann::ordered_json ToJson(const ConsistencyReport& report);

}  // namespace a2d2e

#endif  // A2D2E_EVALUATION_VARIANCE_EXPERIMENTS_H_
