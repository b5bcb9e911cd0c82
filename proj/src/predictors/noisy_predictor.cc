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

#include "a2d2e/predictors/noisy_predictor.h"

#include <cmath>
#include <utility>

#include "a2d2e/core/errors.h"

namespace a2d2e {

NoisyPredictor::NoisyPredictor(std::shared_ptr<Predictor> inner, double sigma,
                               std::uint64_t seed)
    : inner_(std::move(inner)), sigma_(sigma), engine_(MakeEngine(seed)) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError("noise sigma must be finite and non-negative");
  }
}

std::vector<double> NoisyPredictor::DoPredictBatch(const Matrix& points) {
  std::vector<double> values = inner_->PredictBatch(points);
  if (sigma_ == 0.0) return values;
  std::lock_guard<std::mutex> lock(mu_);
  for (double& v : values) v += sigma_ * normal_(engine_);
  return values;
}

std::shared_ptr<NoisyPredictor> WrapWithNoise(std::shared_ptr<Predictor> inner,
                                              double sigma,
                                              std::uint64_t seed) {
  return std::make_shared<NoisyPredictor>(std::move(inner), sigma, seed);
}

}  // namespace a2d2e
