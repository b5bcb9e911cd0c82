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

#ifndef A2D2E_CORE_PARTITION_H_
#define A2D2E_CORE_PARTITION_H_

#include <cstddef>
#include <vector>

namespace a2d2e {

// Bin endpoints z^1 < z^2 < ... < z^{K+1} over one variable's observed range.
// Bin k (0-based) covers [endpoints[k], endpoints[k+1]]; shared interior
// endpoints belong to the lower bin.
struct Partition {
  std::size_t variable = 0;
  std::vector<double> endpoints;

  // Bin count originally asked for, before K > N reduction and merging.
  std::size_t requested_bins = 0;
  // K was larger than the sample count and got reduced to N.
  bool reduced_to_sample_count = false;
  // Tied quantiles (or bins left empty by ties) were merged away.
  bool merged_duplicates = false;

  std::size_t bins() const {
    return endpoints.empty() ? 0 : endpoints.size() - 1;
  }
  double lower(std::size_t k) const { return endpoints[k]; }
  double upper(std::size_t k) const { return endpoints[k + 1]; }
  double width(std::size_t k) const { return endpoints[k + 1] - endpoints[k]; }
};

// Row indices falling in each bin of a partition.
struct BinIndexSets {
  std::size_t variable = 0;
  std::vector<std::vector<std::size_t>> members;

  std::size_t bins() const { return members.size(); }
  std::size_t count(std::size_t k) const { return members[k].size(); }
};

}  // namespace a2d2e

#endif  // A2D2E_CORE_PARTITION_H_
