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

// Game configuration: payoff bimatrix plus the initial-state entanglement
// gamma and the measurement-basis entanglement delta.
//
// JSON schema:
//   { "name": string,                        (optional)
//     "gamma": number in [0, pi],            (default 0)
//     "delta": number in [0, pi],            (default 0)
//     "payoffs": { "alice": [[r,r],[r,r]],
//                  "bob":   [[r,r],[r,r]] }  (optional; bob defaults to
//   }                                         transpose(alice), the whole
//                                             block to Prisoner's Dilemma)

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "qgame/measurement.hpp"
#include "qgame/quantum_core.hpp"

namespace qgame {

/// Malformed or invalid configuration document.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct GameConfig {
  PayoffBimatrix bimatrix = PayoffBimatrix::prisoners_dilemma();
  double gamma = 0.0;
  double delta = 0.0;
  std::string name = "prisoner-dilemma";

  void validate() const {
    detail::require_in_range(gamma, 0.0, kPi, "gamma");
    detail::require_in_range(delta, 0.0, kPi, "delta");
    bimatrix.validate();
  }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

inline GameConfig default_pd_config() { return GameConfig{}; }

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                                const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError(where + key, "unknown key '" + where + key + "'");
    }
  }
}

inline double read_number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "'" + field + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "'" + field + "' must be finite");
  return x;
}

inline double read_angle(const nlohmann::json& obj, const std::string& field) {
  if (!obj.contains(field)) return 0.0;
  const double x = read_number(obj.at(field), field);
  if (x < 0.0 || x > kPi + kConstructionTol) {
    throw ConfigError(field, "'" + field + "' = " + format_double(x) +
                                 " outside bound [0, pi]");
  }
  return x;
}

inline Matrix2 read_matrix(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(field, "'" + field + "' must be a 2x2 array");
  }
  Matrix2 m{};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!v[i].is_array() || v[i].size() != 2) {
      throw ConfigError(field, "'" + field + "' must be a 2x2 array");
    }
    for (std::size_t j = 0; j < 2; ++j) {
      m[i][j] = read_number(v[i][j], field + "[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]");
    }
  }
  return m;
}

}  // namespace detail

inline GameConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config document must be a JSON object");
  detail::reject_unknown_keys(doc, {"name", "gamma", "delta", "payoffs"}, "");

  GameConfig cfg;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ConfigError("name", "'name' must be a string");
    cfg.name = doc["name"].get<std::string>();
  }
  cfg.gamma = detail::read_angle(doc, "gamma");
  cfg.delta = detail::read_angle(doc, "delta");

  if (doc.contains("payoffs")) {
    const auto& p = doc["payoffs"];
    if (!p.is_object()) throw ConfigError("payoffs", "'payoffs' must be an object");
    detail::reject_unknown_keys(p, {"alice", "bob"}, "payoffs.");
    if (!p.contains("alice")) throw ConfigError("payoffs.alice", "'payoffs.alice' is required");
    const Matrix2 alice = detail::read_matrix(p["alice"], "payoffs.alice");
    cfg.bimatrix = p.contains("bob")
                       ? PayoffBimatrix{alice, detail::read_matrix(p["bob"], "payoffs.bob")}
                       : PayoffBimatrix::symmetric(alice);
  }
  return cfg;
}

/// Parses a JSON config document. Syntax errors carry the byte offset.
inline GameConfig parse_config(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", "parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return config_from_json(doc);
}

inline nlohmann::json to_json(const GameConfig& cfg) {
  auto mat = [](const Matrix2& m) {
    return nlohmann::json::array({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}});
  };
  return nlohmann::json{{"name", cfg.name},
                        {"gamma", cfg.gamma},
                        {"delta", cfg.delta},
                        {"payoffs", {{"alice", mat(cfg.bimatrix.a)}, {"bob", mat(cfg.bimatrix.b)}}}};
}

inline std::string serialize_config(const GameConfig& cfg, int indent = 2) {
  return to_json(cfg).dump(indent);
}

}  // namespace qgame
