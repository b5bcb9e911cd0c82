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

#ifndef A2D2E_EVALUATION_BENCHMARK_SUITE_H_
#define A2D2E_EVALUATION_BENCHMARK_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a2d2e/core/effect_curve.h"
#include "a2d2e/core/experiment_config.h"
#include "a2d2e/evaluation/metrics.h"
#include "a2d2e/predictors/tiny_nn.h"
#include "json.hpp"

namespace a2d2e {

enum class PredictorKind { kOracle, kTinyNN };

std::string PredictorKindName(PredictorKind kind);
PredictorKind ParsePredictorKind(std::string_view name);

struct SuiteOptions {
  PredictorKind predictor = PredictorKind::kOracle;
  // Seed is replaced by one derived from each repetition's seed.
  TinyNNConfig nn;
  std::size_t truth_samples = 100000;
  bool truth_pd_proxy = false;
  // Receives one line per failed repetition when set.
  std::ostream* log = nullptr;
};

struct RepetitionFailure {
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::string cause;
};

struct SuiteResult {
  ExperimentConfig config;
  PredictorKind predictor = PredictorKind::kOracle;
  std::vector<Method> methods;
  // One entry per (successful repetition, method), repetition-major.
  std::vector<OrmseReport> reports;
  std::vector<RepetitionFailure> failures;

  std::vector<double> OrmseValues(Method method) const;
};

// Repetition r uses seed DeriveSeed(config.seed, r). Each repetition samples
// inputs, adds Gaussian response noise with variance noise_fraction times the
// response variance, normalizes inputs to the unit box, binds the predictor
// (the true function, or a TinyNN trained on the noisy data), estimates every
// variable's curve per method and scores it against the ground truth. A
// repetition whose predictor fails is logged and skipped.
SuiteResult RunBenchmarkSuite(const ExperimentConfig& config,
                              std::span<const Method> methods,
                              const SuiteOptions& options = {});

// `include_timing` = false drops wall_ms so the output is reproducible byte
// for byte.
nlohmann::ordered_json ToJson(const SuiteResult& result,
                              bool include_timing = true);
// Columns: function, dependence, method, rep, seed, ormse, queries, wall_ms.
std::string ToCsv(const SuiteResult& result);

}  // namespace a2d2e

#endif  // A2D2E_EVALUATION_BENCHMARK_SUITE_H_
