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

#ifndef A2D2E_PREDICTORS_TINY_NN_H_
#define A2D2E_PREDICTORS_TINY_NN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "a2d2e/core/dataset.h"
#include "a2d2e/predictors/predictor.h"
#include "json.hpp"

namespace a2d2e {

enum class Activation { kSigmoid, kTanh };
enum class NnOptimizer { kBfgs, kGradientDescent };

struct TinyNNConfig {
  std::size_t hidden_units = 5;
  Activation activation = Activation::kSigmoid;
  NnOptimizer optimizer = NnOptimizer::kBfgs;
  std::size_t max_iterations = 500;
  // Initial step for gradient descent; halved whenever a step fails to
  // decrease the loss. Ignored by BFGS, which line-searches from a unit step.
  double learning_rate = 0.5;
  // Stop once the relative loss decrease of an iteration falls below this.
  double tolerance = 1e-8;
  // Initial weights are drawn from U(-init_range, init_range).
  double init_range = 0.7;
  // Fit on standardized responses and map predictions back.
  bool standardize_responses = true;
  std::uint64_t seed = 0;
};

// Single-hidden-layer regression network with a linear output unit:
//   f(x) = b2 + sum_h w2[h] * act(b1[h] + <W1[h], x>).
class TinyNN : public Predictor {
 public:
  // Full-batch training on mean squared error. Requires N >= 10. Throws
  // NumericalError naming the iteration if the loss becomes non-finite.
  static TinyNN Train(const Dataset& dataset, const TinyNNConfig& config);

  std::size_t dims() const override { return dims_; }
  std::size_t hidden_units() const { return hidden_bias_.size(); }

  double Evaluate(std::span<const double> x) const;

  // Training loss (MSE on the training scale) after every accepted iteration;
  // element 0 is the loss at initialization.
  const std::vector<double>& loss_history() const { return loss_history_; }
  std::size_t iterations() const { return loss_history_.size() - 1; }

  nlohmann::json ToJson() const;

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  TinyNN() = default;

  std::size_t dims_ = 0;
  Activation activation_ = Activation::kSigmoid;
  std::vector<double> hidden_weights_;  // hidden_units x dims, row-major
  std::vector<double> hidden_bias_;
  std::vector<double> output_weights_;
  double output_bias_ = 0.0;
  double response_mean_ = 0.0;
  double response_scale_ = 1.0;
  std::vector<double> loss_history_;
};

}  // namespace a2d2e

#endif  // A2D2E_PREDICTORS_TINY_NN_H_
