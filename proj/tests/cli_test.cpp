// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the qgame binary end to end and checks its output contracts.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#ifndef QGAME_CLI_PATH
#error "QGAME_CLI_PATH must point at the qgame executable"
#endif

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string cmd = std::string(QGAME_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json RunJson(const std::string& args) {
  const auto r = RunCli(args + " --format json");
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::json::parse(r.out);
}

TEST(CliPayoff, ClassicalDefection) {
  const auto j = RunJson("payoff --gamma 0 --delta 0 --theta1 3.14159265 --theta2 3.14159265");
  EXPECT_NEAR(j["results"]["payoffs"]["alice"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["results"]["payoffs"]["bob"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["command"], "payoff");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_TRUE(j.contains("tolerances"));
  EXPECT_EQ(j["results"]["probabilities"].size(), 4u);
}

TEST(CliPayoff, QuantumProfile) {
  const auto j = RunJson(
      "payoff --gamma 1.5707963 --delta 1.5707963 --theta1 0 --phi1 1.5707963 --theta2 0 "
      "--phi2 1.5707963");
  EXPECT_NEAR(j["results"]["payoffs"]["alice"].get<double>(), 3.0, 1e-9);
  EXPECT_NEAR(j["results"]["payoffs"]["bob"].get<double>(), 3.0, 1e-9);
}

TEST(CliPayoff, PiExpressionsAndDegrees) {
  const auto a = RunJson("payoff --gamma pi/2 --delta pi/2 --theta1 0 --phi1 pi/2 --phi2 pi/2");
  const auto b = RunJson("payoff --degrees --gamma 90 --delta 90 --theta1 0 --phi1 90 --phi2 90");
  EXPECT_NEAR(a["results"]["payoffs"]["alice"].get<double>(), 3.0, 1e-12);
  EXPECT_NEAR(b["results"]["payoffs"]["alice"].get<double>(), 3.0, 1e-12);
}

TEST(CliPayoff, OutOfRangeAngleIsUsageError) {
  EXPECT_EQ(RunCli("payoff --theta1 7").status, 2);
  EXPECT_EQ(RunCli("payoff --phi1 2").status, 2);
  EXPECT_EQ(RunCli("payoff --gamma abc").status, 2);
}

TEST(CliProbs, SumsToOne) {
  const auto j = RunJson("probs --gamma 0.7 --delta 1.9 --theta1 1 --phi1 0.3 --theta2 2 --phi2 1");
  double s = 0.0;
  for (const auto& [k, v] : j["results"]["probabilities"].items()) s += v.get<double>();
  EXPECT_NEAR(s, 1.0, 1e-9);
  EXPECT_FALSE(j["results"].contains("payoffs"));
}

TEST(CliNash, ClassicalDefaults) {
  const auto j = RunJson("nash");
  const auto& fam = j["results"]["families"];
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_NEAR(fam[0]["theta1"].get<double>(), 3.141592653589793, 1e-12);
  EXPECT_NEAR(fam[0]["payoff_a"][0].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(fam[0]["payoff_b"][1].get<double>(), 1.0, 1e-9);
}

TEST(CliNash, EntangledMeasurement) {
  const auto j = RunJson("nash --gamma 0 --delta 2.0944");
  bool found = false;
  for (const auto& f : j["results"]["families"]) {
    if (f["theta1"] == 0.0 && f["theta2"] == 0.0) {
      found = true;
      EXPECT_NEAR(f["payoff_a"][0].get<double>(), 1.5, 1e-4);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliNash, BadGridIsUsageError) {
  EXPECT_EQ(RunCli("nash --grid-theta 0").status, 2);
  EXPECT_EQ(RunCli("nash --epsilon -1").status, 2);
}

TEST(CliVerifyOrdering, ThirdOfPi) {
  const auto r = RunCli("verify-ordering --samples 1.0472");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1 < 1.5 = 1.5 < 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
}

TEST(CliVerifyOrdering, ZeroIsRejected) { EXPECT_EQ(RunCli("verify-ordering --samples 0").status, 2); }

TEST(CliVerifyOrdering, PiIsBoundary) {
  const auto r = RunCli("verify-ordering --samples 3.14159 --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& s = j["results"]["samples"][0];
  EXPECT_EQ(s["status"], "boundary");
  EXPECT_NEAR(s["points"][1]["payoff"].get<double>(), 1.0, 1e-9);
}

TEST(CliVerifyOrdering, NoVerifiableSamples) {
  EXPECT_EQ(RunCli("verify-ordering --samples pi/2").status, 3);
  EXPECT_EQ(RunCli("verify-ordering").status, 2);
}

TEST(CliClassify, Labels) {
  EXPECT_EQ(RunCli("classify --gamma 0 --delta 0").out, "PP\n");
  EXPECT_EQ(RunCli("classify --gamma 0 --delta 1.57").out, "PE\n");
  EXPECT_EQ(RunCli("classify --gamma 1.57 --delta 0").out, "EP\n");
  EXPECT_EQ(RunCli("classify --gamma 4").status, 2);
}

TEST(CliAnalyticNe, ReportsCoverage) {
  const auto j = RunJson("analytic-ne --gamma pi/3");
  EXPECT_TRUE(j["results"]["covered"].get<bool>());
  EXPECT_NEAR(j["results"]["equilibria"][0]["payoff_a"].get<double>(), 1.5, 1e-12);
  const auto k = RunJson("analytic-ne --delta pi/2");
  EXPECT_FALSE(k["results"]["covered"].get<bool>());
}

TEST(CliSweep, CsvContract) {
  const auto r = RunCli("sweep --gammas 0 --deltas 0 --theta1 pi --theta2 pi --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "gamma,delta,payoff_a,payoff_b,regime\n0,0,1,1,PP\n");

  const auto g = RunCli("sweep --gammas 1,0 --deltas 0.5,2 --format csv");
  std::istringstream in(g.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(g.out.find('\r'), std::string::npos);
  EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "gamma,delta,payoff_a,payoff_b,regime");
  EXPECT_NE(g.out.find("\n0,0.5,"), std::string::npos);
}

TEST(CliSweep, SeventeenDigitNumbers) {
  const auto r = RunCli("sweep --gammas 1 --deltas 1 --theta1 0.3 --format csv");
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const std::string payoff = row.substr(4, row.find(',', 4) - 4);
  const double v = std::stod(payoff);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  EXPECT_EQ(payoff, buf);
}

TEST(CliSweep, UnsupportedFormatAndBadOutput) {
  EXPECT_EQ(RunCli("sweep --format xml").status, 2);
  EXPECT_EQ(RunCli("sweep --output /nonexistent-dir/x.csv --format csv").status, 5);
}

TEST(CliSweep, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "qgame_cli_sweep.csv";
  EXPECT_EQ(RunCli("sweep --gamma-points 3 --delta-points 2 --format csv --output " + path.string()).status, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
  std::filesystem::remove(path);
}

TEST(CliConfig, FileMergesUnderFlags) {
  const auto path = std::filesystem::temp_directory_path() / "qgame_cli_cfg.json";
  {
    std::ofstream out(path);
    out << R"({"name": "custom", "gamma": 1.5707963267948966, "delta": 1.5707963267948966})";
  }
  const auto a = RunJson("classify --config " + path.string());
  EXPECT_EQ(a["results"]["regime"], "EE");
  const auto b = RunJson("classify --config " + path.string() + " --delta 0");
  EXPECT_EQ(b["results"]["regime"], "EP");
  {
    std::ofstream out(path);
    out << R"({"gamma": 9})";
  }
  EXPECT_EQ(RunCli("classify --config " + path.string()).status, 3);
  EXPECT_EQ(RunCli("classify --config /nonexistent/cfg.json").status, 5);
  std::filesystem::remove(path);
}

TEST(CliDeterminism, IdenticalInvocationsIdenticalOutput) {
  for (const std::string args : {"nash --gamma 0.4 --delta 2.2 --format json",
                                 "verify-ordering --samples pi/3,2pi/3 --format json",
                                 "sweep --gamma-points 4 --delta-points 4 --format csv"}) {
    EXPECT_EQ(RunCli(args).out, RunCli(args).out) << args;
  }
}

}  // namespace
