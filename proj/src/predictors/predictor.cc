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

#include "a2d2e/predictors/predictor.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>

#include "a2d2e/core/errors.h"

namespace a2d2e {

std::vector<double> Predictor::PredictBatch(const Matrix& points) {
  if (points.rows() == 0) return {};
  if (points.cols() != dims()) {
    throw InvalidArgumentError("predictor expects " + std::to_string(dims()) +
                               "-dimensional points, got " +
                               std::to_string(points.cols()));
  }
  for (const double v : points.data()) {
    if (!std::isfinite(v)) {
      throw InvalidArgumentError("non-finite coordinate in query point");
    }
  }
  std::vector<double> values = DoPredictBatch(points);
  if (values.size() != points.rows()) {
    throw PredictorError("predictor returned " + std::to_string(values.size()) +
                         " values for " + std::to_string(points.rows()) +
                         " points");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw PredictorError("predictor returned a non-finite value for point " +
                           std::to_string(i) + " of the batch");
    }
  }
  return values;
}

double Predictor::PredictOne(std::span<const double> point) {
  Matrix m;
  m.AppendRow(point);
  return PredictBatch(m)[0];
}

std::vector<double> FunctionPredictor::DoPredictBatch(const Matrix& points) {
  std::vector<double> out(points.rows());
  for (std::size_t n = 0; n < points.rows(); ++n) {
    out[n] = function_(points.row(n));
  }
  return out;
}

NormalizedInputPredictor::NormalizedInputPredictor(
    std::shared_ptr<Predictor> inner, Normalizer normalizer)
    : inner_(std::move(inner)), normalizer_(std::move(normalizer)) {
  if (normalizer_.dims() != inner_->dims()) {
    throw InvalidArgumentError("normalizer and predictor dimensions differ");
  }
}

std::vector<double> NormalizedInputPredictor::DoPredictBatch(
    const Matrix& points) {
  return inner_->PredictBatch(normalizer_.Inverse(points));
}

std::vector<double> CountingPredictor::DoPredictBatch(const Matrix& points) {
  points_ += points.rows();
  ++batches_;
  return inner_->PredictBatch(points);
}

std::string MemoizingPredictor::Key(std::span<const double> point) {
  std::string key;
  key.reserve(point.size() * 24);
  char buf[32];
  for (const double v : point) {
    const int len = std::snprintf(buf, sizeof(buf), "%.14e,", v);
    key.append(buf, static_cast<std::size_t>(len));
  }
  return key;
}

std::size_t MemoizingPredictor::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

std::vector<double> MemoizingPredictor::DoPredictBatch(const Matrix& points) {
  if (!inner_->deterministic()) return inner_->PredictBatch(points);

  std::vector<std::string> keys(points.rows());
  for (std::size_t n = 0; n < points.rows(); ++n) keys[n] = Key(points.row(n));

  std::lock_guard<std::mutex> lock(mu_);
  Matrix missing;
  std::vector<const std::string*> missing_keys;
  std::unordered_map<std::string, std::size_t> pending;
  for (std::size_t n = 0; n < points.rows(); ++n) {
    if (cache_.contains(keys[n]) || pending.contains(keys[n])) continue;
    pending.emplace(keys[n], missing.rows());
    missing.AppendRow(points.row(n));
    missing_keys.push_back(&keys[n]);
  }
  if (!missing.empty()) {
    const std::vector<double> fresh = inner_->PredictBatch(missing);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      cache_.emplace(*missing_keys[i], fresh[i]);
    }
  }
  hits_ += points.rows() - missing.rows();
  std::vector<double> out(points.rows());
  for (std::size_t n = 0; n < points.rows(); ++n) out[n] = cache_.at(keys[n]);
  return out;
}

double CalibrateNoiseSigma(std::span<const double> responses, double fraction) {
  if (responses.size() < 2) {
    throw InvalidArgumentError(
        "noise calibration needs at least two responses");
  }
  if (!(fraction >= 0.0)) {
    throw InvalidArgumentError("noise fraction must be non-negative");
  }
  const double n = static_cast<double>(responses.size());
  const double mean =
      std::accumulate(responses.begin(), responses.end(), 0.0) / n;
  double ss = 0.0;
  for (const double y : responses) ss += (y - mean) * (y - mean);
  return std::sqrt(fraction * ss / (n - 1.0));
}

}  // namespace a2d2e
