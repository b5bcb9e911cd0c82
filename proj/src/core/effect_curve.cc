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

#include "a2d2e/core/effect_curve.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "a2d2e/core/errors.h"

namespace a2d2e {

std::string MethodName(Method method) {
  switch (method) {
    case Method::kPd:
      return "pd";
    case Method::kAle:
      return "ale";
    case Method::kA2D2E:
      return "a2d2e";
    case Method::kTruth:
      return "truth";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  if (name == "pd") return Method::kPd;
  if (name == "ale") return Method::kAle;
  if (name == "a2d2e") return Method::kA2D2E;
  if (name == "truth") return Method::kTruth;
  throw InvalidArgumentError("unknown method '" + std::string(name) + "'");
}

void ValidateCurve(const EffectCurve& curve) {
  if (curve.grid.size() != curve.values.size()) {
    throw InvalidArgumentError("curve grid and values differ in length");
  }
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    if (!std::isfinite(curve.grid[i]) || !std::isfinite(curve.values[i])) {
      throw InvalidArgumentError("curve has a non-finite entry at index " +
                                 std::to_string(i));
    }
    if (i > 0 && !(curve.grid[i] > curve.grid[i - 1])) {
      throw InvalidArgumentError("curve grid is not strictly increasing");
    }
  }
}

EffectCurve CenterCurve(EffectCurve curve) {
  if (curve.centered) return curve;
  if (!curve.values.empty()) {
    const double mean =
        std::accumulate(curve.values.begin(), curve.values.end(), 0.0) /
        static_cast<double>(curve.values.size());
    for (double& v : curve.values) v -= mean;
  }
  curve.centered = true;
  return curve;
}

std::vector<double> Linspace(double lo, double hi, std::size_t size) {
  if (size < 2) throw InvalidArgumentError("grid size must be at least 2");
  if (!(hi > lo)) {
    throw InvalidArgumentError("grid needs a non-degenerate range");
  }
  std::vector<double> grid(size);
  const double step = (hi - lo) / static_cast<double>(size - 1);
  for (std::size_t i = 0; i < size; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  grid.back() = hi;
  return grid;
}

std::vector<double> EvaluationGrid(const Dataset& dataset, std::size_t d,
                                   std::size_t size) {
  const auto column = dataset.column(d);
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  return Linspace(*lo, *hi, size);
}

}  // namespace a2d2e
