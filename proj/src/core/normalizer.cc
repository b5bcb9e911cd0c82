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

#include "a2d2e/core/normalizer.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "a2d2e/core/errors.h"

namespace a2d2e {

Normalizer Normalizer::Fit(const Matrix& inputs) {
  if (inputs.rows() == 0 || inputs.cols() == 0) {
    throw InvalidArgumentError("cannot fit a normalizer on an empty matrix");
  }
  std::vector<double> lo(inputs.cols()), hi(inputs.cols());
  for (std::size_t d = 0; d < inputs.cols(); ++d) {
    lo[d] = hi[d] = inputs(0, d);
    for (std::size_t n = 1; n < inputs.rows(); ++n) {
      lo[d] = std::min(lo[d], inputs(n, d));
      hi[d] = std::max(hi[d], inputs(n, d));
    }
  }
  return Normalizer(std::move(lo), std::move(hi));
}

Normalizer::Normalizer(std::vector<double> min, std::vector<double> max)
    : min_(std::move(min)), max_(std::move(max)) {
  if (min_.size() != max_.size() || min_.empty()) {
    throw InvalidArgumentError("normalizer bounds must be non-empty and match");
  }
  for (std::size_t d = 0; d < min_.size(); ++d) {
    if (!std::isfinite(min_[d]) || !std::isfinite(max_[d])) {
      throw InvalidArgumentError("non-finite bound in dimension " +
                                 std::to_string(d));
    }
    if (!(max_[d] > min_[d])) {
      throw InvalidArgumentError("dimension " + std::to_string(d) +
                                 " is constant; cannot normalize");
    }
  }
}

void Normalizer::TransformPoint(std::span<const double> raw,
                                std::span<double> out) const {
  for (std::size_t d = 0; d < min_.size(); ++d) out[d] = Transform(d, raw[d]);
}

void Normalizer::InversePoint(std::span<const double> unit,
                              std::span<double> out) const {
  for (std::size_t d = 0; d < min_.size(); ++d) out[d] = Inverse(d, unit[d]);
}

Matrix Normalizer::Transform(const Matrix& raw) const {
  if (raw.cols() != dims()) {
    throw InvalidArgumentError("normalizer dimension mismatch");
  }
  Matrix out(raw.rows(), raw.cols());
  for (std::size_t n = 0; n < raw.rows(); ++n) {
    TransformPoint(raw.row(n), out.row(n));
  }
  return out;
}

Matrix Normalizer::Inverse(const Matrix& unit) const {
  if (unit.cols() != dims()) {
    throw InvalidArgumentError("normalizer dimension mismatch");
  }
  Matrix out(unit.rows(), unit.cols());
  for (std::size_t n = 0; n < unit.rows(); ++n) {
    InversePoint(unit.row(n), out.row(n));
  }
  return out;
}

}  // namespace a2d2e
