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

#ifndef A2D2E_CORE_ERRORS_H_
#define A2D2E_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace a2d2e {

// Malformed or out-of-contract input (bad shapes, non-finite values, unknown
// names, constant columns, ...).
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A predictor failed to produce values: external process died, protocol
// violation, or a non-finite model output.
class PredictorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File system / stream failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (divergent training, singular systems).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a2d2e

#endif  // A2D2E_CORE_ERRORS_H_
