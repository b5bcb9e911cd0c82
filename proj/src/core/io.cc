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

#include "a2d2e/core/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "a2d2e/core/errors.h"
#include "a2d2e/core/format.h"

namespace a2d2e {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double ParseCell(std::string_view cell, std::size_t line, std::size_t column) {
  double value = 0.0;
  const char* end = cell.data() + cell.size();
  const auto result = std::from_chars(cell.data(), end, value);
  if (cell.empty() || result.ec != std::errc() || result.ptr != end) {
    throw InvalidArgumentError("line " + std::to_string(line) + ", column " +
                               std::to_string(column + 1) +
                               ": non-numeric cell '" + std::string(cell) +
                               "'");
  }
  return value;
}

}  // namespace

LabeledDataset ParseDatasetCsv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw InvalidArgumentError("CSV has no header row");

  const auto header = SplitCells(lines[0]);
  if (header.size() < 2) {
    throw InvalidArgumentError(
        "CSV needs at least one input column and a response column");
  }
  const std::size_t dims = header.size() - 1;
  Matrix inputs(0, dims);
  std::vector<double> responses;
  std::vector<double> row(dims);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = SplitCells(lines[i]);
    if (cells.size() != header.size()) {
      throw InvalidArgumentError("line " + std::to_string(i + 1) + " has " +
                                 std::to_string(cells.size()) +
                                 " cells, expected " +
                                 std::to_string(header.size()));
    }
    for (std::size_t j = 0; j < dims; ++j)
      row[j] = ParseCell(cells[j], i + 1, j);
    inputs.AppendRow(row);
    responses.push_back(ParseCell(cells[dims], i + 1, dims));
  }
  if (responses.empty()) throw InvalidArgumentError("CSV has no data rows");

  LabeledDataset out{{},
                     std::string(header.back()),
                     Dataset(std::move(inputs), std::move(responses))};
  for (std::size_t j = 0; j < dims; ++j) {
    out.input_names.emplace_back(header[j]);
  }
  return out;
}

LabeledDataset ReadDatasetCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ParseDatasetCsv(text.str());
}

std::string CurveCsv(const EffectCurve& curve) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out += FormatDouble(curve.grid[i]);
    out += ',';
    out += FormatDouble(curve.values[i]);
    out += '\n';
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace a2d2e
