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

#ifndef A2D2E_PREDICTORS_NOISY_PREDICTOR_H_
#define A2D2E_PREDICTORS_NOISY_PREDICTOR_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>

#include "a2d2e/core/random.h"
#include "a2d2e/predictors/predictor.h"

namespace a2d2e {

// inner(x) + eps with eps ~ N(0, sigma^2) drawn fresh on every evaluation,
// including repeated evaluations of the same point. Concurrent callers are
// serialized so the noise stream stays reproducible for a given call order.
class NoisyPredictor : public Predictor {
 public:
  NoisyPredictor(std::shared_ptr<Predictor> inner, double sigma,
                 std::uint64_t seed);

  std::size_t dims() const override { return inner_->dims(); }
  bool deterministic() const override { return sigma_ == 0.0; }
  double sigma() const { return sigma_; }

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  std::shared_ptr<Predictor> inner_;
  double sigma_;
  std::mutex mu_;
  Engine engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Throws InvalidArgumentError on a negative or non-finite sigma.
std::shared_ptr<NoisyPredictor> WrapWithNoise(std::shared_ptr<Predictor> inner,
                                              double sigma, std::uint64_t seed);

}  // namespace a2d2e

#endif  // A2D2E_PREDICTORS_NOISY_PREDICTOR_H_
