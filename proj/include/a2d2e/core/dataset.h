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

#ifndef A2D2E_CORE_DATASET_H_
#define A2D2E_CORE_DATASET_H_

#include <cstddef>
#include <span>
#include <vector>

#include "a2d2e/core/matrix.h"

namespace a2d2e {

// Training sample: an N x D input matrix and N responses. This is the
// empirical distribution every estimator conditions on. Immutable once built.
class Dataset {
 public:
  // Throws InvalidArgumentError on N == 0, D == 0, length mismatch or any
  // non-finite entry.
  Dataset(Matrix inputs, std::vector<double> responses);

  std::size_t size() const { return inputs_.rows(); }
  std::size_t dims() const { return inputs_.cols(); }

  const Matrix& inputs() const { return inputs_; }
  const std::vector<double>& responses() const { return responses_; }

  std::span<const double> point(std::size_t n) const { return inputs_.row(n); }
  double value(std::size_t n, std::size_t d) const { return inputs_(n, d); }
  std::vector<double> column(std::size_t d) const { return inputs_.column(d); }

 private:
  Matrix inputs_;
  std::vector<double> responses_;
};

}  // namespace a2d2e

#endif  // A2D2E_CORE_DATASET_H_
