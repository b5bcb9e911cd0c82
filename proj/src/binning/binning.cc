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

#include "a2d2e/binning/binning.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "a2d2e/core/errors.h"

namespace a2d2e {
namespace {

std::size_t BinOf(double x, const std::vector<double>& endpoints) {
  const auto it = std::lower_bound(endpoints.begin() + 1, endpoints.end(), x);
  const auto bin = static_cast<std::size_t>(it - (endpoints.begin() + 1));
  return std::min(bin, endpoints.size() - 2);
}

}  // namespace

Partition QuantilePartition(std::span<const double> values, std::size_t bins,
                            std::size_t variable) {
  if (values.size() < 2) {
    throw InvalidArgumentError("quantile partition needs at least 2 values");
  }
  if (bins == 0) throw InvalidArgumentError("bin count must be at least 1");
  for (const double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidArgumentError("non-finite value in variable " +
                                 std::to_string(variable));
    }
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) {
    throw InvalidArgumentError("variable " + std::to_string(variable) +
                               " has zero-width support");
  }

  Partition partition;
  partition.variable = variable;
  partition.requested_bins = bins;
  std::size_t k = bins;
  if (k > sorted.size()) {
    k = sorted.size();
    partition.reduced_to_sample_count = true;
  }

  // Type-7 quantiles: h = (N - 1) j / K.
  const double last = static_cast<double>(sorted.size() - 1);
  partition.endpoints.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    double q;
    if (j == 0) {
      q = sorted.front();
    } else if (j == k) {
      q = sorted.back();
    } else {
      const double h = last * static_cast<double>(j) / static_cast<double>(k);
      const auto lo = static_cast<std::size_t>(std::floor(h));
      const double frac = h - static_cast<double>(lo);
      q = sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
    }
    if (!partition.endpoints.empty() && !(q > partition.endpoints.back())) {
      partition.merged_duplicates = true;
      continue;
    }
    partition.endpoints.push_back(q);
  }
  if (partition.endpoints.back() != sorted.back()) {
    // The max was merged into a tie with the previous endpoint; it must stay.
    partition.endpoints.back() = sorted.back();
  }

  // Ties can leave a bin with no members under the boundary rule; fold such a
  // bin into its upper neighbour (or the lower one for the last bin).
  for (;;) {
    std::vector<std::size_t> counts(partition.bins(), 0);
    for (const double v : sorted) ++counts[BinOf(v, partition.endpoints)];
    const auto empty = std::find(counts.begin(), counts.end(), 0);
    if (empty == counts.end()) break;
    const auto bin = static_cast<std::size_t>(empty - counts.begin());
    const std::size_t drop = bin + 1 < partition.bins() ? bin + 1 : bin;
    partition.endpoints.erase(partition.endpoints.begin() +
                              static_cast<std::ptrdiff_t>(drop));
    partition.merged_duplicates = true;
  }
  return partition;
}

Partition QuantilePartition(const Dataset& dataset, std::size_t d,
                            std::size_t bins) {
  if (d >= dataset.dims()) {
    throw InvalidArgumentError("variable index " + std::to_string(d) +
                               " out of range");
  }
  return QuantilePartition(dataset.column(d), bins, d);
}

BinIndexSets AssignBins(const Dataset& dataset, const Partition& partition) {
  if (partition.bins() == 0) throw InvalidArgumentError("empty partition");
  if (partition.variable >= dataset.dims()) {
    throw InvalidArgumentError("partition variable out of range");
  }
  BinIndexSets sets;
  sets.variable = partition.variable;
  sets.members.resize(partition.bins());
  const double lo = partition.endpoints.front();
  const double hi = partition.endpoints.back();
  for (std::size_t n = 0; n < dataset.size(); ++n) {
    const double x = dataset.value(n, partition.variable);
    if (x < lo || x > hi) {
      throw InvalidArgumentError("row " + std::to_string(n) +
                                 " lies outside the partition range of "
                                 "variable " +
                                 std::to_string(partition.variable));
    }
    sets.members[BinOf(x, partition.endpoints)].push_back(n);
  }
  return sets;
}

BinLocation Locate(double x, const Partition& partition) {
  if (partition.bins() == 0) throw InvalidArgumentError("empty partition");
  if (x < partition.endpoints.front()) return {0, true};
  if (x > partition.endpoints.back()) return {partition.bins() - 1, true};
  return {BinOf(x, partition.endpoints), false};
}

}  // namespace a2d2e
