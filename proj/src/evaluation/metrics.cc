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

#include "a2d2e/evaluation/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "a2d2e/core/errors.h"

namespace a2d2e {

OrmseReport Ormse(std::span<const EffectCurve> estimated,
                  std::span<const EffectCurve> truth) {
  if (estimated.empty() || estimated.size() != truth.size()) {
    throw InvalidArgumentError("ORMSE needs matching, non-empty curve lists");
  }
  OrmseReport report;
  report.method = estimated.front().method;
  double total = 0.0;
  for (std::size_t i = 0; i < estimated.size(); ++i) {
    const EffectCurve& a = estimated[i];
    const EffectCurve& b = truth[i];
    if (a.variable != b.variable || a.grid != b.grid ||
        a.values.size() != a.grid.size() || b.values.size() != b.grid.size() ||
        a.grid.empty()) {
      throw InvalidArgumentError("curve grids differ for variable " +
                                 std::to_string(a.variable));
    }
    double sq = 0.0;
    for (std::size_t g = 0; g < a.grid.size(); ++g) {
      const double e = a.values[g] - b.values[g];
      sq += e * e;
    }
    const double rmse = std::sqrt(sq / static_cast<double>(a.grid.size()));
    report.per_variable_rmse.push_back(rmse);
    total += rmse;
  }
  report.ormse = total / static_cast<double>(estimated.size());
  return report;
}

Summary Summarize(std::span<const double> values) {
  if (values.empty()) throw InvalidArgumentError("nothing to summarize");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double sum = 0.0;
  for (const double v : sorted) sum += v;
  Summary s;
  s.count = sorted.size();
  s.mean = sum / n;
  if (sorted.size() < 2) {
    s.se = std::numeric_limits<double>::quiet_NaN();
    s.lower = s.upper = s.mean;
    return s;
  }
  double ss = 0.0;
  for (const double v : sorted) ss += (v - s.mean) * (v - s.mean);
  s.se = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  s.lower = s.mean - 1.96 * s.se;
  s.upper = s.mean + 1.96 * s.se;
  return s;
}

double Median(std::span<const double> values) {
  if (values.empty()) throw InvalidArgumentError("median of nothing");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  return sorted.size() % 2 == 1 ? sorted[mid]
                                : 0.5 * (sorted[mid - 1] + sorted[mid]);
}

nlohmann::ordered_json ToJson(const Summary& summary) {
  nlohmann::ordered_json j;
  j["count"] = summary.count;
  j["mean"] = summary.mean;
  j["se"] =
      std::isfinite(summary.se) ? nlohmann::ordered_json(summary.se) : nullptr;
  j["lower"] = summary.lower;
  j["upper"] = summary.upper;
  return j;
}

}  // namespace a2d2e
