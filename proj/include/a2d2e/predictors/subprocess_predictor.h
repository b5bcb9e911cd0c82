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

#ifndef A2D2E_PREDICTORS_SUBPROCESS_PREDICTOR_H_
#define A2D2E_PREDICTORS_SUBPROCESS_PREDICTOR_H_

#include <sys/types.h>

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <string>

#include "a2d2e/predictors/predictor.h"

namespace a2d2e {

// Runs an external model as a child process (`/bin/sh -c command`) speaking
// the line protocol from wire_protocol.h. Batches larger than `max_batch`
// points are split into several requests transparently. Calls are
// serialized.
class SubprocessPredictor : public Predictor {
 public:
  static constexpr std::size_t kDefaultMaxBatch = 1024;

  // Launches the process and completes the hello/ready handshake. Throws
  // PredictorError naming the command when the process cannot be started or
  // does not answer the handshake.
  SubprocessPredictor(std::string command, std::size_t dims,
                      std::size_t max_batch = kDefaultMaxBatch,
                      bool deterministic = true);
  ~SubprocessPredictor() override;

  SubprocessPredictor(const SubprocessPredictor&) = delete;
  SubprocessPredictor& operator=(const SubprocessPredictor&) = delete;

  std::size_t dims() const override { return dims_; }
  bool deterministic() const override { return deterministic_; }
  const std::string& command() const { return command_; }

  std::uint64_t requests_sent() const { return next_id_ - 1; }
  std::uint64_t points_sent() const { return points_sent_; }

  // Sends "bye" and reaps the child; returns its exit status (or -1 when it
  // was killed by a signal). Idempotent.
  int Shutdown();

 protected:
  std::vector<double> DoPredictBatch(const Matrix& points) override;

 private:
  void WriteLine(const std::string& line);
  std::string ReadLine();
  [[noreturn]] void Fail(const std::string& what);

  std::string command_;
  std::size_t dims_;
  std::size_t max_batch_;
  bool deterministic_;

  std::mutex mu_;
  pid_t pid_ = -1;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
  std::uint64_t next_id_ = 1;
  std::uint64_t points_sent_ = 0;
  int exit_status_ = 0;
};

}  // namespace a2d2e

#endif  // A2D2E_PREDICTORS_SUBPROCESS_PREDICTOR_H_
