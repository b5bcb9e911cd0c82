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

#include "a2d2e/predictors/wire_protocol.h"

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "a2d2e/core/errors.h"

namespace a2d2e::wire {

using ordered_json = nlohmann::ordered_json;

std::string HelloMessage(std::size_t dims) {
  return ordered_json{{"type", "hello"}, {"dims", dims}}.dump();
}

std::string PredictMessage(std::uint64_t id, const Matrix& points) {
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 0; n < points.rows(); ++n) {
    const auto row = points.row(n);
    rows.push_back(ordered_json(std::vector<double>(row.begin(), row.end())));
  }
  return ordered_json{{"type", "predict"}, {"id", id}, {"points", rows}}.dump();
}

std::string ByeMessage() { return ordered_json{{"type", "bye"}}.dump(); }

namespace {

nlohmann::json ParseObject(const std::string& line) {
  nlohmann::json msg = nlohmann::json::parse(line, nullptr, false);
  if (msg.is_discarded() || !msg.is_object()) {
    throw PredictorError("predictor sent a malformed line: " +
                         line.substr(0, 200));
  }
  return msg;
}

std::string TypeOf(const nlohmann::json& msg) {
  const auto it = msg.find("type");
  if (it == msg.end() || !it->is_string()) return "";
  return it->get<std::string>();
}

}  // namespace

void ParseReady(const std::string& line) {
  const nlohmann::json msg = ParseObject(line);
  const std::string type = TypeOf(msg);
  if (type == "error") {
    throw PredictorError("predictor rejected handshake: " +
                         msg.value("message", std::string("(no message)")));
  }
  if (type != "ready") {
    throw PredictorError("expected a ready message, got: " +
                         line.substr(0, 200));
  }
}

std::vector<double> ParseResult(const std::string& line, std::uint64_t id,
                                std::size_t expected_count) {
  const nlohmann::json msg = ParseObject(line);
  const std::string type = TypeOf(msg);
  if (type == "error") {
    throw PredictorError("predictor reported an error for request " +
                         std::to_string(id) + ": " +
                         msg.value("message", std::string("(no message)")));
  }
  if (type != "result") {
    throw PredictorError("expected a result message, got type '" + type + "'");
  }
  const auto id_it = msg.find("id");
  if (id_it == msg.end() || !id_it->is_number_unsigned() ||
      id_it->get<std::uint64_t>() != id) {
    throw PredictorError("result id does not match request " +
                         std::to_string(id));
  }
  const auto values_it = msg.find("values");
  if (values_it == msg.end() || !values_it->is_array()) {
    throw PredictorError("result message has no values array");
  }
  if (values_it->size() != expected_count) {
    throw PredictorError("result carries " + std::to_string(values_it->size()) +
                         " values for " + std::to_string(expected_count) +
                         " points");
  }
  std::vector<double> values;
  values.reserve(expected_count);
  for (const auto& v : *values_it) {
    if (!v.is_number()) {
      throw PredictorError("result contains a non-numeric value");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

namespace {

class Session {
 public:
  explicit Session(Predictor& model) : model_(model) {}

  // Returns the reply line, or nullopt on "bye".
  std::optional<std::string> Handle(const std::string& line) {
    const nlohmann::json msg = nlohmann::json::parse(line, nullptr, false);
    if (msg.is_discarded() || !msg.is_object()) {
      return Error(nullptr, "malformed JSON line");
    }
    const std::string type = TypeOf(msg);
    if (type == "bye") return std::nullopt;
    if (type == "hello") return Hello(msg);
    if (type == "predict") return Predict(msg);
    return Error(msg.contains("id") ? msg["id"] : nullptr,
                 "unknown message type '" + type + "'");
  }

 private:
  std::string Hello(const nlohmann::json& msg) {
    const auto it = msg.find("dims");
    if (it == msg.end() || !it->is_number_unsigned()) {
      return Error(nullptr, "hello needs an unsigned integer 'dims'");
    }
    if (it->get<std::size_t>() != model_.dims()) {
      return Error(nullptr, "model expects " + std::to_string(model_.dims()) +
                                " dimensions, host declared " +
                                std::to_string(it->get<std::size_t>()));
    }
    ready_ = true;
    return ordered_json{{"type", "ready"}}.dump();
  }

  std::string Predict(const nlohmann::json& msg) {
    const auto id_it = msg.find("id");
    if (id_it == msg.end() || !id_it->is_number_unsigned()) {
      return Error(id_it == msg.end() ? nlohmann::json(nullptr) : *id_it,
                   "predict needs an unsigned integer 'id'");
    }
    const std::uint64_t id = id_it->get<std::uint64_t>();
    if (!ready_) return Error(id, "handshake required");
    if (last_id_.has_value() && id <= *last_id_) {
      return Error(id, "ids must be strictly increasing");
    }
    last_id_ = id;
    const auto points_it = msg.find("points");
    if (points_it == msg.end() || !points_it->is_array()) {
      return Error(id, "predict needs a 'points' array");
    }
    Matrix points(0, model_.dims());
    for (const auto& p : *points_it) {
      if (!p.is_array() || p.size() != model_.dims()) {
        return Error(id, "every point must be an array of " +
                             std::to_string(model_.dims()) + " numbers");
      }
      std::vector<double> row;
      row.reserve(p.size());
      for (const auto& v : p) {
        if (!v.is_number())
          return Error(id, "point coordinates must be numbers");
        row.push_back(v.get<double>());
      }
      points.AppendRow(row);
    }
    try {
      const std::vector<double> values = model_.PredictBatch(points);
      return ordered_json{{"type", "result"}, {"id", id}, {"values", values}}
          .dump();
    } catch (const std::exception& e) {
      return Error(id, e.what());
    }
  }

  static std::string Error(const nlohmann::json& id,
                           const std::string& message) {
    ordered_json reply{{"type", "error"}};
    reply["id"] = id.is_number_unsigned()
                      ? ordered_json(id.get<std::uint64_t>())
                      : ordered_json(nullptr);
    reply["message"] = message;
    return reply.dump();
  }

  Predictor& model_;
  bool ready_ = false;
  std::optional<std::uint64_t> last_id_;
};

}  // namespace

bool Serve(std::istream& in, std::ostream& out, Predictor& model) {
  Session session(model);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::optional<std::string> reply = session.Handle(line);
    if (!reply.has_value()) return true;
    out << *reply << '\n';
    out.flush();
  }
  return false;
}

}  // namespace a2d2e::wire
