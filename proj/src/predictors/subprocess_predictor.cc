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

#include "a2d2e/predictors/subprocess_predictor.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <utility>

#include "a2d2e/core/errors.h"
#include "a2d2e/predictors/wire_protocol.h"

namespace a2d2e {
namespace {

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] {
    struct sigaction current{};
    if (sigaction(SIGPIPE, nullptr, &current) == 0 &&
        current.sa_handler == SIG_DFL) {
      struct sigaction ignore{};
      ignore.sa_handler = SIG_IGN;
      sigemptyset(&ignore.sa_mask);
      sigaction(SIGPIPE, &ignore, nullptr);
    }
  });
}

}  // namespace

SubprocessPredictor::SubprocessPredictor(std::string command, std::size_t dims,
                                         std::size_t max_batch,
                                         bool deterministic)
    : command_(std::move(command)),
      dims_(dims),
      max_batch_(max_batch),
      deterministic_(deterministic) {
  if (dims_ == 0) throw InvalidArgumentError("predictor needs dims >= 1");
  if (max_batch_ == 0) throw InvalidArgumentError("max_batch must be positive");
  IgnoreSigpipe();

  int to_child[2];
  int from_child[2];
  if (pipe2(to_child, O_CLOEXEC) != 0) {
    throw PredictorError("cannot create pipe for '" + command_ +
                         "': " + std::strerror(errno));
  }
  if (pipe2(from_child, O_CLOEXEC) != 0) {
    const int err = errno;
    close(to_child[0]);
    close(to_child[1]);
    throw PredictorError("cannot create pipe for '" + command_ +
                         "': " + std::strerror(err));
  }
  pid_ = fork();
  if (pid_ < 0) {
    const int err = errno;
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
      close(fd);
    }
    throw PredictorError("cannot fork for '" + command_ +
                         "': " + std::strerror(err));
  }
  if (pid_ == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  to_child_ = fdopen(to_child[1], "w");
  from_child_ = fdopen(from_child[0], "r");
  if (to_child_ == nullptr || from_child_ == nullptr) {
    Fail("cannot open pipe streams");
  }

  std::lock_guard<std::mutex> lock(mu_);
  WriteLine(wire::HelloMessage(dims_));
  const std::string reply = ReadLine();
  try {
    wire::ParseReady(reply);
  } catch (const PredictorError& e) {
    Fail(e.what());
  }
}

SubprocessPredictor::~SubprocessPredictor() {
  try {
    Shutdown();
  } catch (...) {
  }
}

int SubprocessPredictor::Shutdown() {
  if (pid_ <= 0) return exit_status_;
  if (to_child_ != nullptr) {
    std::fputs(wire::ByeMessage().c_str(), to_child_);
    std::fputc('\n', to_child_);
    std::fclose(to_child_);
    to_child_ = nullptr;
  }
  if (from_child_ != nullptr) {
    std::fclose(from_child_);
    from_child_ = nullptr;
  }
  int status = 0;
  while (waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
  }
  pid_ = -1;
  exit_status_ = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return exit_status_;
}

void SubprocessPredictor::Fail(const std::string& what) {
  std::string detail;
  if (to_child_ != nullptr) {
    std::fclose(to_child_);
    to_child_ = nullptr;
  }
  if (from_child_ != nullptr) {
    std::fclose(from_child_);
    from_child_ = nullptr;
  }
  if (pid_ > 0) {
    int status = 0;
    // Give a dying child a moment; never block forever on a live one.
    for (int i = 0; i < 50; ++i) {
      const pid_t r = waitpid(pid_, &status, WNOHANG);
      if (r == pid_) {
        if (WIFEXITED(status)) {
          detail = " (exit status " + std::to_string(WEXITSTATUS(status)) + ")";
        } else if (WIFSIGNALED(status)) {
          detail =
              " (killed by signal " + std::to_string(WTERMSIG(status)) + ")";
        }
        pid_ = -1;
        break;
      }
      usleep(10000);
    }
    if (pid_ > 0) {
      kill(pid_, SIGKILL);
      waitpid(pid_, &status, 0);
      pid_ = -1;
    }
  }
  exit_status_ = -1;
  throw PredictorError("external predictor '" + command_ + "': " + what +
                       detail);
}

void SubprocessPredictor::WriteLine(const std::string& line) {
  if (to_child_ == nullptr) Fail("process is not running");
  if (std::fputs(line.c_str(), to_child_) == EOF ||
      std::fputc('\n', to_child_) == EOF || std::fflush(to_child_) == EOF) {
    Fail("write to process failed");
  }
}

std::string SubprocessPredictor::ReadLine() {
  if (from_child_ == nullptr) Fail("process is not running");
  std::string line;
  for (;;) {
    const int c = std::fgetc(from_child_);
    if (c == EOF) Fail("process closed its output");
    if (c == '\n') break;
    line.push_back(static_cast<char>(c));
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<double> SubprocessPredictor::DoPredictBatch(const Matrix& points) {
  std::lock_guard<std::mutex> lock(mu_);
  if (pid_ <= 0) Fail("process is not running");
  std::vector<double> values;
  values.reserve(points.rows());
  for (std::size_t start = 0; start < points.rows(); start += max_batch_) {
    const std::size_t count = std::min(max_batch_, points.rows() - start);
    Matrix chunk(count, dims_);
    for (std::size_t i = 0; i < count; ++i) {
      std::copy_n(points.row(start + i).begin(), dims_, chunk.row(i).begin());
    }
    const std::uint64_t id = next_id_++;
    WriteLine(wire::PredictMessage(id, chunk));
    points_sent_ += count;
    const std::string reply = ReadLine();
    std::vector<double> part;
    try {
      part = wire::ParseResult(reply, id, count);
    } catch (const PredictorError& e) {
      // A well-formed error reply leaves the session usable; anything else
      // means the stream can no longer be trusted.
      if (reply.find("\"type\":\"error\"") != std::string::npos) {
        throw PredictorError("external predictor '" + command_ +
                             "': " + e.what());
      }
      Fail(e.what());
    }
    values.insert(values.end(), part.begin(), part.end());
  }
  return values;
}

}  // namespace a2d2e
