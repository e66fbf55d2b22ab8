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

// qgame: command-line front end for quantized 2x2 games.
//
//   qgame payoff          --gamma G --delta D --theta1 T --phi1 P ...
//   qgame probs           (same flags as payoff)
//   qgame nash            --gamma G --delta D --grid-theta N --grid-phi M
//   qgame sweep           --gammas a,b,... --deltas c,d,... --theta1 ...
//   qgame classify        --gamma G --delta D
//   qgame verify-ordering --samples pi/3,2pi/3
//   qgame analytic-ne     --gamma G --delta D
//
// Angles are radians unless --degrees is given. Radian values also accept
// pi expressions such as "pi", "pi/3", "2pi/3" or "2*pi/3".
//
// Exit status: 0 success, 2 usage, 3 validation, 4 verification failure,
// 5 I/O error, 1 anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qgame/qgame.hpp"

namespace {

using nlohmann::json;
using namespace qgame;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kValidation = 3,
  kVerification = 4,
  kIo = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num17(double v) { return fmt::format("{:.17g}", v); }
std::string num(double v) { return fmt::format("{:.10g}", v); }

// "1.5", "pi", "pi/3", "2pi/3", "2*pi/3", "0.5*pi".
double parse_radians(std::string text, const std::string& flag) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  auto to_double = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw UsageError(flag + ": cannot parse angle '" + text + "'");
    }
    if (pos != s.size()) throw UsageError(flag + ": cannot parse angle '" + text + "'");
    return v;
  };
  const auto at = text.find("pi");
  if (at == std::string::npos) return to_double(text);

  std::string coef = text.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double value = kPi * (coef.empty() ? 1.0 : coef == "-" ? -1.0 : to_double(coef));
  std::string rest = text.substr(at + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError(flag + ": cannot parse angle '" + text + "'");
    const double div = to_double(rest.substr(1));
    if (div == 0.0) throw UsageError(flag + ": division by zero in '" + text + "'");
    value /= div;
  }
  return value;
}

double parse_angle(const std::string& text, const std::string& flag, bool degrees) {
  if (degrees) {
    if (text.find("pi") != std::string::npos) {
      throw UsageError(flag + ": pi expressions are radians; drop --degrees");
    }
    return parse_radians(text, flag) * kPi / 180.0;
  }
  return parse_radians(text, flag);
}

double checked_angle(const std::string& text, const std::string& flag, bool degrees, double hi) {
  const double v = parse_angle(text, flag, degrees);
  if (!(v >= -kConstructionTol && v <= hi + kConstructionTol)) {
    throw UsageError(fmt::format("{} = {} outside [0, {}]", flag, num17(v), num17(hi)));
  }
  return v;
}

struct Options {
  std::optional<std::string> config_path;
  std::optional<std::string> gamma, delta, theta1, phi1, theta2, phi2;
  int grid_theta = kDefaultThetaPoints;
  int grid_phi = kDefaultPhiPoints;
  std::optional<double> epsilon;
  std::string format = "table";
  std::optional<std::string> output;
  bool degrees = false;
  std::vector<std::string> samples;
  std::vector<std::string> gammas, deltas;
  int gamma_points = 0;
  int delta_points = 0;
};

void add_format_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--output", o.output, "Write output to PATH instead of stdout");
}

void add_game_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON game config (flags override it)");
  cmd->add_option("--gamma", o.gamma, "Initial-state entanglement, [0, pi]");
  cmd->add_option("--delta", o.delta, "Measurement-basis entanglement, [0, pi]");
  cmd->add_flag("--degrees", o.degrees, "Interpret angle flags as degrees");
}

void add_strategy_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--theta1", o.theta1, "Alice theta, [0, pi]");
  cmd->add_option("--phi1", o.phi1, "Alice phi, [0, pi/2]");
  cmd->add_option("--theta2", o.theta2, "Bob theta, [0, pi]");
  cmd->add_option("--phi2", o.phi2, "Bob phi, [0, pi/2]");
}

void add_grid_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid-theta", o.grid_theta, "Theta grid points (>= 2)")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--grid-phi", o.grid_phi, "Phi grid points (>= 2)")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--epsilon", o.epsilon, "NE slack")->check(CLI::NonNegativeNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameConfig load_config(const Options& o) {
  GameConfig cfg = o.config_path ? parse_config(read_file(*o.config_path)) : default_pd_config();
  if (o.gamma) cfg.gamma = checked_angle(*o.gamma, "--gamma", o.degrees, kPi);
  if (o.delta) cfg.delta = checked_angle(*o.delta, "--delta", o.degrees, kPi);
  cfg.validate();
  return cfg;
}

StrategyParams load_strategy(const std::optional<std::string>& theta,
                             const std::optional<std::string>& phi, const std::string& idx,
                             bool degrees) {
  StrategyParams s;
  if (theta) s.theta = checked_angle(*theta, "--theta" + idx, degrees, kPi);
  if (phi) s.phi = checked_angle(*phi, "--phi" + idx, degrees, kPi / 2);
  return s;
}

json strategy_json(const StrategyParams& s) { return {{"theta", s.theta}, {"phi", s.phi}}; }

json game_json(const GameConfig& cfg) {
  json j = to_json(cfg);
  j["regime"] = std::string(to_string(classify_regime(cfg.gamma, cfg.delta)));
  return j;
}

json make_record(const std::string& command, json inputs, json results, double epsilon) {
  return {{"command", command},
          {"version", kVersion},
          {"inputs", std::move(inputs)},
          {"tolerances",
           {{"construction", kConstructionTol}, {"payoff", kPayoffTol}, {"epsilon", epsilon}}},
          {"results", std::move(results)}};
}

/// Rendered output for one invocation plus its exit status.
struct Rendered {
  std::string text;
  int status = kOk;
};

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out = fmt::format("{}\n", fmt::join(header, ","));
  for (const auto& r : rows) out += fmt::format("{}\n", fmt::join(r, ","));
  return out;
}

// ---------------------------------------------------------------------------

Rendered run_payoff(const Options& o, bool probs_only) {
  const GameConfig cfg = load_config(o);
  const StrategyParams s1 = load_strategy(o.theta1, o.phi1, "1", o.degrees);
  const StrategyParams s2 = load_strategy(o.theta2, o.phi2, "2", o.degrees);
  const QuantumGame game(cfg);
  const auto probs = game.probabilities(s1, s2);
  const Payoffs pay = game.payoffs(s1, s2);

  json pj;
  for (Outcome oc : kOutcomes) pj[std::string(to_string(oc))] = probs[oc];
  json results{{"probabilities", pj}};
  if (!probs_only) results["payoffs"] = {{"alice", pay.a}, {"bob", pay.b}};
  const std::string name = probs_only ? "probs" : "payoff";
  json inputs{{"game", game_json(cfg)}, {"s1", strategy_json(s1)}, {"s2", strategy_json(s2)}};

  if (o.format == "json") {
    return {make_record(name, inputs, results, 0.0).dump(2) + "\n"};
  }
  if (o.format == "csv") {
    std::vector<std::string> header{"gamma", "delta", "theta1", "phi1", "theta2", "phi2"};
    std::vector<std::string> row{num17(cfg.gamma), num17(cfg.delta), num17(s1.theta),
                                 num17(s1.phi),    num17(s2.theta),  num17(s2.phi)};
    if (!probs_only) {
      header.insert(header.end(), {"payoff_a", "payoff_b"});
      row.insert(row.end(), {num17(pay.a), num17(pay.b)});
    }
    for (Outcome oc : kOutcomes) {
      header.push_back("p_" + std::string(to_string(oc)));
      row.push_back(num17(probs[oc]));
    }
    return {csv(header, {row})};
  }
  std::string t = fmt::format("game     {} (regime {})\n", cfg.name,
                              to_string(classify_regime(cfg.gamma, cfg.delta)));
  t += fmt::format("gamma    {}\ndelta    {}\n", num(cfg.gamma), num(cfg.delta));
  t += fmt::format("alice    theta={} phi={}\nbob      theta={} phi={}\n", num(s1.theta),
                   num(s1.phi), num(s2.theta), num(s2.phi));
  if (!probs_only) t += fmt::format("payoff   alice={} bob={}\n", num(pay.a), num(pay.b));
  for (Outcome oc : kOutcomes) t += fmt::format("P({})    {}\n", to_string(oc), num(probs[oc]));
  return {t};
}

Rendered run_nash(const Options& o) {
  const GameConfig cfg = load_config(o);
  const double eps = o.epsilon.value_or(kNashEpsilon);
  const auto grid = StrategyGrid::uniform(o.grid_theta, o.grid_phi);
  const NashResult res = find_nash(cfg, grid, eps);

  json inputs{{"game", game_json(cfg)},
              {"grid", {{"theta_points", o.grid_theta}, {"phi_points", o.grid_phi}}}};
  if (o.format == "json") {
    json profiles = json::array();
    for (const auto& p : res.profiles) {
      profiles.push_back({{"s1", strategy_json(p.s1)},
                          {"s2", strategy_json(p.s2)},
                          {"payoff_a", p.payoffs.a},
                          {"payoff_b", p.payoffs.b}});
    }
    json families = json::array();
    for (const auto& f : res.families()) {
      families.push_back({{"theta1", f.theta1},
                          {"theta2", f.theta2},
                          {"members", f.members},
                          {"payoff_a", {f.min_payoff_a, f.max_payoff_a}},
                          {"payoff_b", {f.min_payoff_b, f.max_payoff_b}}});
    }
    json results{{"count", res.profiles.size()}, {"families", families}, {"profiles", profiles}};
    return {make_record("nash", inputs, results, eps).dump(2) + "\n"};
  }
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : res.profiles) {
      rows.push_back({num17(p.s1.theta), num17(p.s1.phi), num17(p.s2.theta), num17(p.s2.phi),
                      num17(p.payoffs.a), num17(p.payoffs.b)});
    }
    return {csv({"theta1", "phi1", "theta2", "phi2", "payoff_a", "payoff_b"}, rows)};
  }
  std::string t = fmt::format("game     {} (regime {}) gamma={} delta={}\n", cfg.name,
                              to_string(classify_regime(cfg.gamma, cfg.delta)), num(cfg.gamma),
                              num(cfg.delta));
  t += fmt::format("grid     {} theta x {} phi, epsilon={}\n", o.grid_theta, o.grid_phi, eps);
  t += fmt::format("found    {} profile(s) in {} theta famil{}\n", res.profiles.size(),
                   res.families().size(), res.families().size() == 1 ? "y" : "ies");
  for (const auto& f : res.families()) {
    t += fmt::format("  theta1={} theta2={}  members={}  payoff_a=[{}, {}] payoff_b=[{}, {}]\n",
                     num(f.theta1), num(f.theta2), f.members, num(f.min_payoff_a),
                     num(f.max_payoff_a), num(f.min_payoff_b), num(f.max_payoff_b));
  }
  return {t};
}

Rendered run_classify(const Options& o) {
  const GameConfig cfg = load_config(o);
  const RegimeLabel r = classify_regime(cfg.gamma, cfg.delta);
  json inputs{{"gamma", cfg.gamma}, {"delta", cfg.delta}};
  if (o.format == "json") {
    return {make_record("classify", inputs, {{"regime", std::string(to_string(r))}}, 0.0).dump(2) +
            "\n"};
  }
  if (o.format == "csv") {
    return {csv({"gamma", "delta", "regime"},
                {{num17(cfg.gamma), num17(cfg.delta), std::string(to_string(r))}})};
  }
  return {std::string(to_string(r)) + "\n"};
}

std::vector<double> parse_list(const std::vector<std::string>& items, const std::string& flag,
                               bool degrees, double hi) {
  std::vector<double> out;
  for (const auto& s : items) out.push_back(checked_angle(s, flag, degrees, hi));
  return out;
}

std::vector<double> uniform_points(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? 0.0 : kPi * i / (n - 1));
  if (n > 1) v.back() = kPi;
  return v;
}

Rendered run_sweep(const Options& o) {
  const GameConfig cfg = load_config(o);
  const StrategyParams s1 = load_strategy(o.theta1, o.phi1, "1", o.degrees);
  const StrategyParams s2 = load_strategy(o.theta2, o.phi2, "2", o.degrees);
  if (!o.gammas.empty() && o.gamma_points > 0) throw UsageError("use --gammas or --gamma-points");
  if (!o.deltas.empty() && o.delta_points > 0) throw UsageError("use --deltas or --delta-points");
  std::vector<double> gammas = o.gamma_points > 0 ? uniform_points(o.gamma_points)
                               : o.gammas.empty() ? std::vector<double>{cfg.gamma}
                                                  : parse_list(o.gammas, "--gammas", o.degrees, kPi);
  std::vector<double> deltas = o.delta_points > 0 ? uniform_points(o.delta_points)
                               : o.deltas.empty() ? std::vector<double>{cfg.delta}
                                                  : parse_list(o.deltas, "--deltas", o.degrees, kPi);
  const auto rows = payoff_sweep(cfg, gammas, deltas, s1, s2);

  json inputs{{"game", game_json(cfg)},
              {"s1", strategy_json(s1)},
              {"s2", strategy_json(s2)},
              {"gammas", gammas},
              {"deltas", deltas}};
  if (o.format == "json") {
    json jr = json::array();
    for (const auto& r : rows) {
      jr.push_back({{"gamma", r.gamma},
                    {"delta", r.delta},
                    {"payoff_a", r.payoffs.a},
                    {"payoff_b", r.payoffs.b},
                    {"regime", std::string(to_string(r.regime))}});
    }
    return {make_record("sweep", inputs, {{"rows", jr}}, 0.0).dump(2) + "\n"};
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    table.push_back({num17(r.gamma), num17(r.delta), num17(r.payoffs.a), num17(r.payoffs.b),
                     std::string(to_string(r.regime))});
  }
  if (o.format == "csv") return {csv({"gamma", "delta", "payoff_a", "payoff_b", "regime"}, table)};
  std::string t = fmt::format("{:>14} {:>14} {:>14} {:>14} {:>6}\n", "gamma", "delta",
                              "payoff_a", "payoff_b", "regime");
  for (const auto& r : rows) {
    t += fmt::format("{:>14} {:>14} {:>14} {:>14} {:>6}\n", num(r.gamma), num(r.delta),
                     num(r.payoffs.a), num(r.payoffs.b), to_string(r.regime));
  }
  return {t};
}

std::string chain_text(const SampleReport& s) {
  if (s.comparisons.size() != 3) return "";
  auto strict = [](const Comparison& c) {
    return c.verdict == Verdict::Pass ? "<" : c.verdict == Verdict::Boundary ? "=" : ">";
  };
  auto brief = [](double v) { return fmt::format("{:.6g}", v); };
  const auto& c = s.comparisons;
  return fmt::format("{} {} {} {} {} {} {}", brief(s.points[0].payoff), strict(c[0]),
                     brief(s.points[1].payoff), c[1].verdict == Verdict::Pass ? "=" : "!=",
                     brief(s.points[2].payoff), strict(c[2]), brief(s.points[3].payoff));
}

Rendered run_verify_ordering(const Options& o) {
  if (o.samples.empty()) throw UsageError("--samples requires at least one value");
  std::vector<double> samples;
  for (const auto& s : o.samples) {
    const double x = parse_angle(s, "--samples", o.degrees);
    if (!(x > kConstructionTol && x <= kPi + kConstructionTol)) {
      throw UsageError(fmt::format("--samples: {} outside (0, pi]", num17(x)));
    }
    samples.push_back(x);
  }
  const double eps = o.epsilon.value_or(kNashEpsilon);
  const auto grid = StrategyGrid::uniform(o.grid_theta, o.grid_phi);
  const OrderingReport rep = verify_ordering(samples, grid, eps);
  if (rep.verifiable_count() == 0) {
    throw ValidationError(
        "no verifiable samples: every sample has 1/3 < sin^2(x/2) < 2/3, where no pure "
        "equilibrium is known");
  }
  const int status = rep.passed() ? kOk : kVerification;

  json inputs{{"samples", samples},
              {"grid", {{"theta_points", o.grid_theta}, {"phi_points", o.grid_phi}}}};
  if (o.format == "json") {
    json js = json::array();
    for (const auto& s : rep.samples) {
      json pts = json::array();
      for (const auto& p : s.points) {
        pts.push_back({{"regime", std::string(to_string(p.regime))},
                       {"gamma", p.gamma},
                       {"delta", p.delta},
                       {"strategy", strategy_json(p.strategy)},
                       {"payoff", p.payoff},
                       {"certified", p.certified}});
      }
      json cmp = json::array();
      for (const auto& c : s.comparisons) {
        cmp.push_back({{"relation", c.relation},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"margin", c.margin},
                       {"verdict", std::string(to_string(c.verdict))}});
      }
      js.push_back({{"x", s.x},
                    {"sin2_half", s.sin2},
                    {"status", std::string(to_string(s.status))},
                    {"chain", chain_text(s)},
                    {"points", pts},
                    {"comparisons", cmp}});
    }
    json results{{"samples", js}, {"passed", rep.passed()}};
    return {make_record("verify-ordering", inputs, results, eps).dump(2) + "\n", status};
  }
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : rep.samples) {
      for (const auto& c : s.comparisons) {
        rows.push_back({num17(s.x), std::string(to_string(s.status)), c.relation, num17(c.lhs),
                        num17(c.rhs), num17(c.margin), std::string(to_string(c.verdict))});
      }
      if (s.comparisons.empty()) {
        rows.push_back({num17(s.x), std::string(to_string(s.status)), "", "", "", "", ""});
      }
    }
    return {csv({"x", "status", "relation", "lhs", "rhs", "margin", "verdict"}, rows), status};
  }
  std::string t;
  for (const auto& s : rep.samples) {
    t += fmt::format("sample x={} sin^2(x/2)={}  [{}]\n", num(s.x), num(s.sin2), to_string(s.status));
    if (s.comparisons.empty()) continue;
    t += fmt::format("  chain  PP < PE = EP < EE :  {}\n", chain_text(s));
    for (const auto& p : s.points) {
      t += fmt::format("  {}  gamma={} delta={} theta={} phi={}  payoff={}  {}\n", to_string(p.regime),
                       num(p.gamma), num(p.delta), num(p.strategy.theta), num(p.strategy.phi),
                       num(p.payoff), p.certified ? "certified NE" : "NOT a grid NE");
    }
    for (const auto& c : s.comparisons) {
      t += fmt::format("  {:<18} {} vs {}  margin={}  {}\n", c.relation, num(c.lhs), num(c.rhs),
                       num(c.margin), to_string(c.verdict));
    }
  }
  t += fmt::format("overall: {}\n", rep.passed() ? "PASS" : "FAIL");
  return {t, status};
}

Rendered run_analytic_ne(const Options& o) {
  const GameConfig cfg = load_config(o);
  const auto ne = analytic_ne(cfg);
  json inputs{{"game", game_json(cfg)}};
  auto phi_json = [](const std::optional<double>& p) { return p ? json(*p) : json("any"); };
  auto phi_text = [](const std::optional<double>& p) { return p ? num(*p) : std::string("any"); };

  if (o.format == "json") {
    json results;
    if (!ne) {
      results = {{"covered", false}};
    } else {
      json list = json::array();
      for (const auto& e : *ne) {
        list.push_back({{"theta1", e.theta1},
                        {"theta2", e.theta2},
                        {"phi1", phi_json(e.phi1)},
                        {"phi2", phi_json(e.phi2)},
                        {"payoff_a", e.payoffs.a},
                        {"payoff_b", e.payoffs.b}});
      }
      results = {{"covered", true}, {"equilibria", list}};
    }
    return {make_record("analytic-ne", inputs, results, 0.0).dump(2) + "\n"};
  }
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    if (ne) {
      for (const auto& e : *ne) {
        rows.push_back({num17(e.theta1), e.phi1 ? num17(*e.phi1) : "any", num17(e.theta2),
                        e.phi2 ? num17(*e.phi2) : "any", num17(e.payoffs.a), num17(e.payoffs.b)});
      }
    }
    return {csv({"theta1", "phi1", "theta2", "phi2", "payoff_a", "payoff_b"}, rows)};
  }
  std::string t = fmt::format("regime {} gamma={} delta={}\n",
                              to_string(classify_regime(cfg.gamma, cfg.delta)), num(cfg.gamma),
                              num(cfg.delta));
  if (!ne) return {t + "not covered: no closed-form equilibrium for these parameters\n"};
  for (const auto& e : *ne) {
    t += fmt::format("  theta1={} phi1={} theta2={} phi2={}  payoffs=({}, {})\n", num(e.theta1),
                     phi_text(e.phi1), num(e.theta2), phi_text(e.phi2), num(e.payoffs.a),
                     num(e.payoffs.b));
  }
  return {t};
}

void emit(const Options& o, const std::string& text) {
  if (!o.output) {
    std::cout << text;
    return;
  }
  std::ofstream out(*o.output, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + *o.output + "'");
  out << text;
  if (!out) throw IoError("failed writing output file '" + *o.output + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized 2x2 games with entangled initial states and measurement bases"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* payoff = app.add_subcommand("payoff", "Payoffs and outcome probabilities of a profile");
  auto* probs = app.add_subcommand("probs", "Outcome probabilities of a profile");
  for (auto* c : {payoff, probs}) {
    add_game_flags(c, o);
    add_strategy_flags(c, o);
    add_format_flags(c, o);
  }

  auto* nash = app.add_subcommand("nash", "Pure-strategy Nash equilibria on a strategy grid");
  add_game_flags(nash, o);
  add_grid_flags(nash, o);
  add_format_flags(nash, o);

  auto* sweep = app.add_subcommand("sweep", "Payoffs of a fixed profile over (gamma, delta)");
  add_game_flags(sweep, o);
  add_strategy_flags(sweep, o);
  add_format_flags(sweep, o);
  sweep->add_option("--gammas", o.gammas, "Gamma values")->delimiter(',');
  sweep->add_option("--deltas", o.deltas, "Delta values")->delimiter(',');
  sweep->add_option("--gamma-points", o.gamma_points, "Uniform gamma points on [0, pi]")
      ->check(CLI::Range(1, 100000));
  sweep->add_option("--delta-points", o.delta_points, "Uniform delta points on [0, pi]")
      ->check(CLI::Range(1, 100000));

  auto* classify = app.add_subcommand("classify", "Regime label PP, PE, EP or EE");
  add_game_flags(classify, o);
  add_format_flags(classify, o);

  auto* verify = app.add_subcommand("verify-ordering", "Check PP < PE = EP < EE at equilibrium");
  verify->add_option("--samples", o.samples, "Values x used as delta (PE) and gamma (EP)")
      ->delimiter(',');
  verify->add_flag("--degrees", o.degrees, "Interpret samples as degrees");
  add_grid_flags(verify, o);
  add_format_flags(verify, o);

  auto* analytic = app.add_subcommand("analytic-ne", "Closed-form Prisoner's Dilemma equilibria");
  add_game_flags(analytic, o);
  add_format_flags(analytic, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Rendered r;
    if (payoff->parsed()) r = run_payoff(o, false);
    else if (probs->parsed()) r = run_payoff(o, true);
    else if (nash->parsed()) r = run_nash(o);
    else if (sweep->parsed()) r = run_sweep(o);
    else if (classify->parsed()) r = run_classify(o);
    else if (verify->parsed()) r = run_verify_ordering(o);
    else if (analytic->parsed()) r = run_analytic_ne(o);
    emit(o, r.text);
    return r.status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const VerificationError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kVerification;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const GridError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kValidation;
  } catch (const UnsupportedConfiguration& e) {
    std::cerr << "unsupported configuration: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
