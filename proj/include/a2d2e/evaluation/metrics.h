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

#ifndef A2D2E_EVALUATION_METRICS_H_
#define A2D2E_EVALUATION_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "a2d2e/core/effect_curve.h"
#include "a2d2e/core/experiment_config.h"
#include "json.hpp"

namespace a2d2e {

// Score of one method on one repetition. Ormse() fills only the error
// fields; the suite adds provenance and cost.
struct OrmseReport {
  std::string function;
  DependenceLevel dependence = DependenceLevel::kIndependent;
  Method method = Method::kA2D2E;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_variable_rmse;
  double ormse = 0.0;
  std::uint64_t queries = 0;
  double wall_ms = 0.0;
};

// Mean over variables of the grid RMSE between paired curves. Curves are
// compared as given (no re-centering). Throws InvalidArgumentError when the
// lists differ in length, variables or grids.
OrmseReport Ormse(std::span<const EffectCurve> estimated,
                  std::span<const EffectCurve> truth);

// mean +/- 1.96 SE with SE = s / sqrt(n), s the unbiased standard deviation.
struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double se = 0.0;  // NaN for a single value
  double lower = 0.0;
  double upper = 0.0;
};

// Values are sorted before reduction, so the result does not depend on their
// order. Throws InvalidArgumentError on an empty input.
Summary Summarize(std::span<const double> values);

double Median(std::span<const double> values);

nlohmann::ordered_json ToJson(const Summary& summary);

}  // namespace a2d2e

#endif  // A2D2E_EVALUATION_METRICS_H_
