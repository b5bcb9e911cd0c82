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

#ifndef A2D2E_CORE_IO_H_
#define A2D2E_CORE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "a2d2e/core/dataset.h"
#include "a2d2e/core/effect_curve.h"

namespace a2d2e {

struct LabeledDataset {
  std::vector<std::string> input_names;
  std::string response_name;
  Dataset data;
};

// Comma-separated file with a header row; the last column is the response.
// Throws IoError when the file cannot be read and InvalidArgumentError on a
// non-numeric cell, a ragged row or fewer than two columns.
LabeledDataset ReadDatasetCsv(const std::filesystem::path& path);
LabeledDataset ParseDatasetCsv(std::string_view text);

// "x,value" header then one row per grid point, shortest round-trip doubles.
std::string CurveCsv(const EffectCurve& curve);

// Throws IoError on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace a2d2e

#endif  // A2D2E_CORE_IO_H_
