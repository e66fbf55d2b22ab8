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

#include <random>

#include <gtest/gtest.h>

#include "qgame/gamespec.hpp"

namespace qgame {
namespace {

TEST(DefaultConfig, PrisonersDilemma) {
  const auto cfg = default_pd_config();
  EXPECT_EQ(cfg.bimatrix.a[1][0], 5.0);  // Alice defects, Bob cooperates
  EXPECT_EQ(cfg.bimatrix.b[0][1], 5.0);  // Alice cooperates, Bob defects
  EXPECT_EQ(cfg.gamma, 0.0);
  EXPECT_EQ(cfg.delta, 0.0);
  EXPECT_EQ(cfg.name, "prisoner-dilemma");
  EXPECT_EQ(cfg.bimatrix.entry(Player::A, Outcome::DC), 5.0);
  EXPECT_EQ(cfg.bimatrix.entry(Player::B, Outcome::CD), 5.0);
}

TEST(ParseConfig, AnglesOnly) {
  const auto cfg = parse_config(R"({"gamma": 1.5707963, "delta": 1.5707963})");
  EXPECT_DOUBLE_EQ(cfg.gamma, 1.5707963);
  EXPECT_DOUBLE_EQ(cfg.delta, 1.5707963);
  EXPECT_EQ(cfg.bimatrix, PayoffBimatrix::prisoners_dilemma());
}

TEST(ParseConfig, GammaAbovePiNamesField) {
  try {
    parse_config(R"({"gamma": 4.0})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "gamma");
    EXPECT_NE(std::string(e.what()).find("pi"), std::string::npos);
  }
  EXPECT_THROW(parse_config(R"({"delta": -0.5})"), ConfigError);
}

TEST(ParseConfig, FullDocumentEqualsDefaultWithOverrides) {
  const auto cfg = parse_config(R"({
    "name": "prisoner-dilemma", "gamma": 0.5, "delta": 0.25,
    "payoffs": {"alice": [[3, 0], [5, 1]], "bob": [[3, 5], [0, 1]]}
  })");
  GameConfig expected = default_pd_config();
  expected.gamma = 0.5;
  expected.delta = 0.25;
  EXPECT_EQ(cfg, expected);
}

TEST(ParseConfig, MissingAnglesDefaultToZero) {
  const auto cfg = parse_config("{}");
  EXPECT_EQ(cfg, default_pd_config());
}

TEST(ParseConfig, BobDefaultsToTranspose) {
  const auto cfg = parse_config(R"({"payoffs": {"alice": [[4, 1], [2, 3]]}})");
  EXPECT_EQ(cfg.bimatrix.b, (Matrix2{{{4, 2}, {1, 3}}}));
  EXPECT_TRUE(cfg.bimatrix.is_symmetric());
}

TEST(ParseConfig, RejectsUnknownKeys) {
  EXPECT_THROW(parse_config(R"({"gama": 1.0})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"payoffs": {"alice": [[1,1],[1,1]], "carol": 1}})"), ConfigError);
}

TEST(ParseConfig, MalformedDocumentReportsLocation) {
  try {
    parse_config(R"({"gamma": 1.0,, })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 15"), std::string::npos) << e.what();
  }
}

TEST(ParseConfig, RejectsBadShapesAndTypes) {
  EXPECT_THROW(parse_config(R"([1, 2])"), ConfigError);
  EXPECT_THROW(parse_config(R"({"gamma": "half"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"name": 3})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"payoffs": {"alice": [[1, 2, 3], [4, 5, 6]]}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"payoffs": {"alice": [[1, 2], [3, "x"]]}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"payoffs": {"bob": [[1, 2], [3, 4]]}})"), ConfigError);
}

// Property: serialize(parse(d)) reproduces d for arbitrary valid documents.
TEST(ParseConfigProperty, RoundTrip) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::uniform_int_distribution<int> payoff(-10, 10);
  for (int k = 0; k < 200; ++k) {
    nlohmann::json doc{{"name", "game-" + std::to_string(k)},
                       {"gamma", angle(rng)},
                       {"delta", angle(rng)},
                       {"payoffs",
                        {{"alice", {{payoff(rng), payoff(rng)}, {payoff(rng), payoff(rng)}}},
                         {"bob", {{payoff(rng), payoff(rng)}, {payoff(rng), payoff(rng)}}}}}};
    const auto cfg = parse_config(doc.dump());
    const auto back = nlohmann::json::parse(serialize_config(cfg));
    EXPECT_NEAR(back["gamma"].get<double>(), doc["gamma"].get<double>(), 1e-15);
    EXPECT_NEAR(back["delta"].get<double>(), doc["delta"].get<double>(), 1e-15);
    EXPECT_EQ(back["payoffs"], doc["payoffs"]);
    EXPECT_EQ(back["name"], doc["name"]);
    EXPECT_EQ(parse_config(serialize_config(cfg)), cfg);
  }
}

}  // namespace
}  // namespace qgame
