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

// Newline-delimited JSON predictor protocol.
//
//   host -> {"type":"hello","dims":D}
//        <- {"type":"ready"}
//   host -> {"type":"predict","id":I,"points":[[...],...]}
//        <- {"type":"result","id":I,"values":[...]}
//   host -> {"type":"bye"}        (predictor exits 0)
//
// Malformed or out-of-order requests get {"type":"error","id":I|null,
// "message":...} and the session continues. Ids are strictly increasing.
// Doubles use the shortest representation that round-trips.

#ifndef A2D2E_PREDICTORS_WIRE_PROTOCOL_H_
#define A2D2E_PREDICTORS_WIRE_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "a2d2e/core/matrix.h"
#include "a2d2e/predictors/predictor.h"
#include "json.hpp"

namespace a2d2e::wire {

std::string HelloMessage(std::size_t dims);
std::string PredictMessage(std::uint64_t id, const Matrix& points);
std::string ByeMessage();

// Host side: validates a reply to `PredictMessage(id, ...)` carrying
// `expected_count` values. Throws PredictorError on an error object, wrong
// type or id, or a value count mismatch.
std::vector<double> ParseResult(const std::string& line, std::uint64_t id,
                                std::size_t expected_count);

// Host side: throws PredictorError unless `line` is {"type":"ready"}.
void ParseReady(const std::string& line);

// Predictor side. Answers requests read line by line from `in` using `model`
// until "bye" (returns true) or end of input (returns false). Every request
// line produces exactly one reply line on `out`.
bool Serve(std::istream& in, std::ostream& out, Predictor& model);

}  // namespace a2d2e::wire

#endif  // A2D2E_PREDICTORS_WIRE_PROTOCOL_H_
