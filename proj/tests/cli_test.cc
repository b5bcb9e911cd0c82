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

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "a2d2e/core/io.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace a2d2e {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string output;
};

std::string Cli() { return std::string("'") + A2D2E_CLI_PATH + "'"; }

RunResult RunCli(const std::string& args) {
  RunResult r;
  const std::string command = Cli() + " " + args + " 2>&1";
  std::FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    r.output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ =
        fs::temp_directory_path() / ("a2d2e_cli_" + std::string(info->name()) +
                                     "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return "'" + (dir_ / name).string() + "'";
  }

  fs::path dir_;
};

TEST_F(CliTest, EstimateIsReproducible) {
  const std::string args =
      "estimate --function simple-1 --method all --n 150 --seed 3 "
      "--dependence high --out ";
  ASSERT_EQ(RunCli(args + Path("a")).status, 0);
  ASSERT_EQ(RunCli(args + Path("b")).status, 0);
  std::size_t csv = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".csv") continue;
    ++csv;
    EXPECT_EQ(Slurp(entry.path()), Slurp(dir_ / "b" / name)) << name;
  }
  EXPECT_EQ(csv, 3u * 2u);
  for (const char* name : {"pd_x1.csv", "ale_x2.csv", "a2d2e_x1.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "a" / name)) << name;
  }

  auto a = nlohmann::json::parse(Slurp(dir_ / "a" / "manifest.json"));
  auto b = nlohmann::json::parse(Slurp(dir_ / "b" / "manifest.json"));
  EXPECT_EQ(a["seed"], 3);
  EXPECT_EQ(a["samples"], 150);
  EXPECT_EQ(a["queries"]["a2d2e"], 150 * 4);
  EXPECT_EQ(a["queries"]["pd"], 150 * 100 * 2);
  for (auto* m : {&a, &b}) {
    m->erase("started");
    m->erase("finished");
  }
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, LinearVariableGivesStraightLine) {
  ASSERT_EQ(
      RunCli("estimate --function simple-1 --n 200 --out " + Path("o")).status,
      0);
  const LabeledDataset curve =
      ReadDatasetCsv((dir_ / "o" / "a2d2e_x2.csv").string());
  const auto& x = curve.data.inputs();
  const auto& y = curve.data.responses();
  const std::size_t n = y.size();
  ASSERT_EQ(n, 100u);
  const double slope = (y[n - 1] - y[0]) / (x(n - 1, 0) - x(0, 0));
  EXPECT_GT(slope, 0.0);
  double mean = 0;
  for (double v : y) mean += v / static_cast<double>(n);
  EXPECT_NEAR(mean, 0.0, 1e-12);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(y[i], y[0] + slope * (x(i, 0) - x(0, 0)), 1e-10);
  }
}

TEST_F(CliTest, ExternalPredictorMatchesOracle) {
  const std::string common =
      " --function simple-2 --method all --n 80 --seed 5 --out ";
  ASSERT_EQ(
      RunCli("estimate --predictor oracle" + common + Path("oracle")).status,
      0);
  const std::string external =
      "\"external:" + Cli() + " serve-oracle --function simple-2\"";
  const RunResult r =
      RunCli("estimate --predictor " + external + common + Path("ext"));
  ASSERT_EQ(r.status, 0) << r.output;
  for (const auto& entry : fs::directory_iterator(dir_ / "oracle")) {
    if (entry.path().extension() != ".csv") continue;
    const auto want = ReadDatasetCsv(entry.path().string());
    const auto got =
        ReadDatasetCsv((dir_ / "ext" / entry.path().filename()).string());
    ASSERT_EQ(got.data.size(), want.data.size());
    for (std::size_t i = 0; i < want.data.size(); ++i) {
      EXPECT_NEAR(got.data.responses()[i], want.data.responses()[i], 1e-12);
    }
  }
}

TEST_F(CliTest, MissingExternalCommandIsPredictorError) {
  const RunResult r = RunCli(
      "estimate --function simple-1 --predictor "
      "'external:no-such-model-binary-xyz' --out " +
      Path("o"));
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.output.find("no-such-model-binary-xyz"), std::string::npos)
      << r.output;
}

TEST_F(CliTest, TrainedNetworkPredictor) {
  const RunResult r = RunCli(
      "estimate --function franke --predictor nn --method ale --n 60 --out " +
      Path("o"));
  ASSERT_EQ(r.status, 0) << r.output;
  const auto manifest =
      nlohmann::json::parse(Slurp(dir_ / "o" / "manifest.json"));
  EXPECT_GT(manifest["predictor"]["training_iterations"].get<int>(), 0);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "ale_x2.csv"));
}

TEST_F(CliTest, DataInput) {
  {
    std::ofstream out(dir_ / "good.csv");
    out << "a,b,y\n";
    for (int i = 0; i < 30; ++i) {
      const double a = i / 29.0, b = (i * 7 % 30) / 29.0;
      out << a << "," << b << "," << a * a + b << "\n";
    }
  }
  {
    std::ofstream out(dir_ / "bad.csv");
    out << "a,b,y\n0.1,0.2,0.3\n0.4,oops,0.6\n";
  }
  RunResult r = RunCli("estimate --data " + Path("good.csv") +
                       " --predictor nn --bins 5 --out " + Path("o"));
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_TRUE(fs::exists(dir_ / "o" / "a2d2e_x2.csv"));

  r = RunCli("estimate --data " + Path("bad.csv") + " --predictor nn --out " +
             Path("o2"));
  EXPECT_EQ(r.status, 2) << r.output;

  r = RunCli("estimate --data " + Path("missing.csv") +
             " --predictor nn --out " + Path("o3"));
  EXPECT_EQ(r.status, 4) << r.output;

  r = RunCli("estimate --data " + Path("good.csv") +
             " --predictor oracle --out " + Path("o4"));
  EXPECT_EQ(r.status, 2) << r.output;
}

TEST_F(CliTest, ArgumentErrors) {
  EXPECT_EQ(RunCli("").status, 2);
  EXPECT_EQ(RunCli("--help").status, 0);
  EXPECT_EQ(RunCli("--version").status, 0);
  EXPECT_EQ(RunCli("estimate --function nope --out " + Path("o")).status, 2);
  EXPECT_EQ(
      RunCli("estimate --function simple-1 --method truth --out " + Path("o"))
          .status,
      2);
  EXPECT_EQ(RunCli("estimate --function simple-1 --dependence extreme --out " +
                   Path("o"))
                .status,
            2);
  EXPECT_EQ(RunCli("estimate --function simple-1").status, 2);
  EXPECT_EQ(RunCli("verify --check lemma2 --dims 20 --out " + Path("v")).status,
            2);
  EXPECT_EQ(RunCli("verify --check bogus --out " + Path("v")).status, 2);
}

TEST_F(CliTest, VerifyChecksPass) {
  for (const std::string check : {"lemma1", "consistency"}) {
    const RunResult r =
        RunCli("verify --check " + check + " --seed 1 --out " + Path("v"));
    EXPECT_EQ(r.status, 0) << r.output;
    EXPECT_NE(r.output.find(check + ": PASS"), std::string::npos) << r.output;
    EXPECT_TRUE(fs::exists(dir_ / "v" / (check + ".json")));
  }
  const RunResult r =
      RunCli("verify --check lemma2 --dims 3 --out " + Path("v"));
  EXPECT_EQ(r.status, 0) << r.output;
  const auto report = nlohmann::json::parse(Slurp(dir_ / "v" / "lemma2.json"));
  EXPECT_FALSE(report.empty());
}

TEST_F(CliTest, ServeOracleSession) {
  const std::string input =
      "{\"type\":\"hello\",\"dims\":2}\n"
      "{\"type\":\"predict\",\"id\":1,\"points\":[[0.5,0.25],[1,0]]}\n"
      "{\"type\":\"predict\",\"id\":1,\"points\":[[0,0]]}\n"
      "{\"type\":\"bye\"}\n";
  {
    std::ofstream out(dir_ / "in.jsonl");
    out << input;
  }
  const RunResult r =
      RunCli("serve-oracle --function simple-1 < " + Path("in.jsonl"));
  EXPECT_EQ(r.status, 0) << r.output;
  std::istringstream lines(r.output);
  std::vector<nlohmann::json> replies;
  std::string line;
  while (std::getline(lines, line))
    replies.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(replies.size(), 3u);
  EXPECT_EQ(replies[0]["type"], "ready");
  EXPECT_EQ(replies[1]["type"], "result");
  EXPECT_EQ(replies[1]["values"][0].get<double>(), 0.5);
  EXPECT_EQ(replies[1]["values"][1].get<double>(), 1.0);
  EXPECT_EQ(replies[2]["type"], "error");
}

}  // namespace
}  // namespace a2d2e
