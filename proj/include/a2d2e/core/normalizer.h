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

#ifndef A2D2E_CORE_NORMALIZER_H_
#define A2D2E_CORE_NORMALIZER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "a2d2e/core/dataset.h"
#include "a2d2e/core/matrix.h"

namespace a2d2e {

// Per-dimension min-max map to the unit interval, learned from training
// inputs only. Points outside the training range map outside [0, 1]; nothing
// is clipped.
class Normalizer {
 public:
  // Throws InvalidArgumentError naming the first constant column.
  static Normalizer Fit(const Matrix& inputs);
  static Normalizer Fit(const Dataset& dataset) {
    return Fit(dataset.inputs());
  }
  // Explicit bounds; requires max > min per dimension.
  Normalizer(std::vector<double> min, std::vector<double> max);

  std::size_t dims() const { return min_.size(); }
  double min(std::size_t d) const { return min_[d]; }
  double max(std::size_t d) const { return max_[d]; }
  double range(std::size_t d) const { return max_[d] - min_[d]; }

  double Transform(std::size_t d, double raw) const {
    return (raw - min_[d]) / (max_[d] - min_[d]);
  }
  double Inverse(std::size_t d, double unit) const {
    return min_[d] + unit * (max_[d] - min_[d]);
  }

  void TransformPoint(std::span<const double> raw, std::span<double> out) const;
  void InversePoint(std::span<const double> unit, std::span<double> out) const;
  Matrix Transform(const Matrix& raw) const;
  Matrix Inverse(const Matrix& unit) const;

 private:
  std::vector<double> min_;
  std::vector<double> max_;
};

}  // namespace a2d2e

#endif  // A2D2E_CORE_NORMALIZER_H_
