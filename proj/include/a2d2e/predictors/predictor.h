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

// The black-box boundary. Estimators only ever see `Predictor::PredictBatch`.

#ifndef A2D2E_PREDICTORS_PREDICTOR_H_
#define A2D2E_PREDICTORS_PREDICTOR_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "a2d2e/core/matrix.h"
#include "a2d2e/core/normalizer.h"

namespace a2d2e {

class Predictor {
 public:
  virtual ~Predictor() = default;

  virtual std::size_t dims() const = 0;

  // True when identical points always yield identical values. Only
  // deterministic predictors may be memoized.
  virtual bool deterministic() const { return true; }

  // One value per row of `points`, in row order. Rows must have dims()
  // entries and be finite; an empty matrix yields an empty result. Throws
  // InvalidArgumentError on bad input and PredictorError when the model
  // fails or returns a non-finite value.
  std::vector<double> PredictBatch(const Matrix& points);

  double PredictOne(std::span<const double> point);

 protected:
  // Called with a validated, non-empty batch.
  virtual std::vector<double> DoPredictBatch(const Matrix& points) = 0;
};

// Wraps a closed-form function of the point.
class FunctionPredictor : public Predictor {
 public:
  using Function = std::function<double(std::span<const double>)>;

  FunctionPredictor(std::size_t dims, Function function)
      : dims_(dims), function_(std::move(function)) {}

  std::size_t dims() const override { return dims_; }

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  std::size_t dims_;
  Function function_;
};

// Accepts points in normalized units and queries `inner` in the raw units
// the normalizer was fit on.
class NormalizedInputPredictor : public Predictor {
 public:
  NormalizedInputPredictor(std::shared_ptr<Predictor> inner,
                           Normalizer normalizer);

  std::size_t dims() const override { return inner_->dims(); }
  bool deterministic() const override { return inner_->deterministic(); }

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  std::shared_ptr<Predictor> inner_;
  Normalizer normalizer_;
};

// Counts the points and batches forwarded to `inner`.
class CountingPredictor : public Predictor {
 public:
  explicit CountingPredictor(std::shared_ptr<Predictor> inner)
      : inner_(std::move(inner)) {}

  std::size_t dims() const override { return inner_->dims(); }
  bool deterministic() const override { return inner_->deterministic(); }

  std::uint64_t points() const { return points_.load(); }
  std::uint64_t batches() const { return batches_.load(); }
  void Reset() {
    points_ = 0;
    batches_ = 0;
  }

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  std::shared_ptr<Predictor> inner_;
  std::atomic<std::uint64_t> points_{0};
  std::atomic<std::uint64_t> batches_{0};
};

// Within-run cache keyed on point coordinates rounded to 15 significant
// digits. Only points missing from the cache reach `inner`, each at most once
// per batch. Non-deterministic inner predictors bypass the cache entirely.
class MemoizingPredictor : public Predictor {
 public:
  explicit MemoizingPredictor(std::shared_ptr<Predictor> inner)
      : inner_(std::move(inner)) {}

  std::size_t dims() const override { return inner_->dims(); }
  bool deterministic() const override { return inner_->deterministic(); }

  std::size_t cache_size() const;
  std::uint64_t hits() const { return hits_.load(); }

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  static std::string Key(std::span<const double> point);

  std::shared_ptr<Predictor> inner_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, double> cache_;
  std::atomic<std::uint64_t> hits_{0};
};

// sqrt(fraction * sample variance) with the unbiased (N - 1) estimator; the
// default fraction gives noise variance equal to 10% of the response variance.
// Throws InvalidArgumentError on fewer than two responses.
double CalibrateNoiseSigma(std::span<const double> responses,
                           double fraction = 0.10);

}  // namespace a2d2e

#endif  // A2D2E_PREDICTORS_PREDICTOR_H_
