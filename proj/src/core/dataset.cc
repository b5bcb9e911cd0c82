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

#include "a2d2e/core/dataset.h"

#include <cmath>
#include <string>
#include <utility>

#include "a2d2e/core/errors.h"

namespace a2d2e {

Dataset::Dataset(Matrix inputs, std::vector<double> responses)
    : inputs_(std::move(inputs)), responses_(std::move(responses)) {
  if (inputs_.rows() == 0) {
    throw InvalidArgumentError("dataset needs at least one row");
  }
  if (inputs_.cols() == 0) {
    throw InvalidArgumentError("dataset needs at least one input dimension");
  }
  if (responses_.size() != inputs_.rows()) {
    throw InvalidArgumentError(
        "dataset has " + std::to_string(inputs_.rows()) + " input rows but " +
        std::to_string(responses_.size()) + " responses");
  }
  for (std::size_t n = 0; n < inputs_.rows(); ++n) {
    for (std::size_t d = 0; d < inputs_.cols(); ++d) {
      if (!std::isfinite(inputs_(n, d))) {
        throw InvalidArgumentError("non-finite input at row " +
                                   std::to_string(n) + ", column " +
                                   std::to_string(d));
      }
    }
    if (!std::isfinite(responses_[n])) {
      throw InvalidArgumentError("non-finite response at row " +
                                 std::to_string(n));
    }
  }
}

}  // namespace a2d2e
