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

#ifndef A2D2E_CORE_EFFECT_CURVE_H_
#define A2D2E_CORE_EFFECT_CURVE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "a2d2e/core/dataset.h"

namespace a2d2e {

enum class Method { kPd, kAle, kA2D2E, kTruth };

// Lowercase tag: "pd", "ale", "a2d2e", "truth".
std::string MethodName(Method method);
// Inverse of MethodName. Throws InvalidArgumentError on unknown tags.
Method ParseMethod(std::string_view name);

// A main-effect function of one variable sampled on an evaluation grid.
struct EffectCurve {
  std::size_t variable = 0;
  std::vector<double> grid;
  std::vector<double> values;
  Method method = Method::kPd;
  bool centered = false;
};

// Throws InvalidArgumentError unless the grid is strictly increasing, values
// are finite and both have the same length.
void ValidateCurve(const EffectCurve& curve);

// Subtracts the arithmetic mean over the grid points and marks the curve
// centered. A curve already flagged centered is returned unchanged, so the
// operation is exactly idempotent.
EffectCurve CenterCurve(EffectCurve curve);

// `size` equally spaced points on [lo, hi], endpoints included. Requires
// size >= 2 and lo < hi.
std::vector<double> Linspace(double lo, double hi, std::size_t size);

// Default evaluation grid for variable d: `size` equally spaced points over the
// observed range of that column.
std::vector<double> EvaluationGrid(const Dataset& dataset, std::size_t d,
                                   std::size_t size);

}  // namespace a2d2e

#endif  // A2D2E_CORE_EFFECT_CURVE_H_
