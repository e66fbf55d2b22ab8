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

// Pure-strategy Nash equilibria of quantized 2x2 games on a discretized
// (theta, phi) strategy grid, the product/entangled regime labels, the
// closed-form Prisoner's Dilemma equilibria and the payoff-ordering check
//   $PP < $PE = $EP < $EE.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/game.hpp"
#include "qgame/gamespec.hpp"
#include "qgame/measurement.hpp"
#include "qgame/quantum_core.hpp"

namespace qgame {

/// Invalid search configuration (empty or malformed grid, negative epsilon).
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The closed-form equilibria only exist for the Prisoner's Dilemma.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Default certification slack for exact analytic points.
inline constexpr double kNashEpsilon = 1e-9;
/// Default slack for coarse sweep-scale scans.
inline constexpr double kSweepEpsilon = 1e-6;

inline constexpr int kDefaultThetaPoints = 25;
inline constexpr int kDefaultPhiPoints = 13;

// ---------------------------------------------------------------------------
// Strategy grid
// ---------------------------------------------------------------------------

class StrategyGrid {
 public:
  /// Uniform grid with both endpoints. Each count must be at least 2.
  static StrategyGrid uniform(int theta_points = kDefaultThetaPoints,
                              int phi_points = kDefaultPhiPoints,
                              const StrategyBounds& bounds = {}) {
    if (theta_points < 2) throw GridError("theta grid needs at least 2 points");
    if (phi_points < 2) throw GridError("phi grid needs at least 2 points");
    return StrategyGrid(linspace(bounds.theta_max, theta_points),
                        linspace(bounds.phi_max, phi_points), bounds);
  }

  /// Explicit point lists; sorted and de-duplicated, endpoints required.
  static StrategyGrid from_points(std::vector<double> theta, std::vector<double> phi,
                                  const StrategyBounds& bounds = {}) {
    return StrategyGrid(normalize(std::move(theta)), normalize(std::move(phi)), bounds);
  }

  /// This grid with extra points merged in.
  StrategyGrid with_points(const std::vector<double>& theta,
                           const std::vector<double>& phi) const {
    auto t = theta_;
    auto p = phi_;
    t.insert(t.end(), theta.begin(), theta.end());
    p.insert(p.end(), phi.begin(), phi.end());
    return from_points(std::move(t), std::move(p), bounds_);
  }

  const std::vector<double>& theta_points() const { return theta_; }
  const std::vector<double>& phi_points() const { return phi_; }
  const StrategyBounds& bounds() const { return bounds_; }
  std::size_t size() const { return theta_.size() * phi_.size(); }

  /// All strategies, theta-major then phi, both ascending.
  std::vector<StrategyParams> strategies() const {
    std::vector<StrategyParams> out;
    out.reserve(size());
    for (double t : theta_)
      for (double p : phi_) out.push_back({t, p});
    return out;
  }

  bool contains(const StrategyParams& s) const {
    auto near = [](const std::vector<double>& v, double x) {
      return std::any_of(v.begin(), v.end(),
                         [x](double y) { return std::abs(x - y) <= kConstructionTol; });
    };
    return near(theta_, s.theta) && near(phi_, s.phi);
  }

 private:
  StrategyGrid(std::vector<double> theta, std::vector<double> phi, const StrategyBounds& bounds)
      : theta_(std::move(theta)), phi_(std::move(phi)), bounds_(bounds) {
    check(theta_, bounds_.theta_max, "theta");
    check(phi_, bounds_.phi_max, "phi");
  }

  static std::vector<double> linspace(double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = hi * i / (n - 1);
    v.back() = hi;
    return v;
  }

  static std::vector<double> normalize(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
      if (out.empty() || x - out.back() > kConstructionTol) out.push_back(x);
    }
    return out;
  }

  static void check(const std::vector<double>& v, double hi, const std::string& name) {
    if (v.empty()) throw GridError(name + " grid is empty");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || v[i] < -kConstructionTol || v[i] > hi + kConstructionTol) {
        throw GridError(name + " grid point " + detail::format_double(v[i]) + " out of range");
      }
      if (i > 0 && !(v[i] > v[i - 1])) throw GridError(name + " grid not strictly increasing");
    }
    if (std::abs(v.front()) > kConstructionTol || std::abs(v.back() - hi) > kConstructionTol) {
      throw GridError(name + " grid must include both endpoints 0 and " +
                      detail::format_double(hi));
    }
  }

  std::vector<double> theta_;
  std::vector<double> phi_;
  StrategyBounds bounds_;
};

// ---------------------------------------------------------------------------
// Regimes
// ---------------------------------------------------------------------------

/// Product (P) or entangled (E) initial state, then measurement basis.
enum class RegimeLabel { PP, PE, EP, EE };

inline constexpr std::string_view to_string(RegimeLabel r) {
  switch (r) {
    case RegimeLabel::PP: return "PP";
    case RegimeLabel::PE: return "PE";
    case RegimeLabel::EP: return "EP";
    case RegimeLabel::EE: return "EE";
  }
  return "?";
}

inline RegimeLabel classify_regime(double gamma, double delta) {
  detail::require_in_range(gamma, 0.0, kPi, "gamma");
  detail::require_in_range(delta, 0.0, kPi, "delta");
  const bool entangled_in = std::abs(gamma) > kConstructionTol;
  const bool entangled_out = std::abs(delta) > kConstructionTol;
  if (!entangled_in) return entangled_out ? RegimeLabel::PE : RegimeLabel::PP;
  return entangled_out ? RegimeLabel::EE : RegimeLabel::EP;
}

// ---------------------------------------------------------------------------
// Best response and equilibrium search
// ---------------------------------------------------------------------------

/// All grid strategies within kPayoffTol of the best payoff for `player`
/// against a fixed opponent strategy.
inline std::vector<StrategyParams> best_response(const GameConfig& cfg, Player player,
                                                 const StrategyParams& opponent,
                                                 const StrategyGrid& grid) {
  const QuantumGame game(cfg, grid.bounds());
  const auto strategies = grid.strategies();
  if (strategies.empty()) throw GridError("empty strategy grid");
  const StrategyUnitary opp = game.unitary(opponent);

  std::vector<double> values;
  values.reserve(strategies.size());
  for (const auto& s : strategies) {
    const StrategyUnitary u = game.unitary(s);
    const Payoffs p = player == Player::A ? game.payoffs(u, opp) : game.payoffs(opp, u);
    values.push_back(p.of(player));
  }
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<StrategyParams> out;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (values[i] >= best - kPayoffTol) out.push_back(strategies[i]);
  }
  return out;
}

struct NashProfile {
  StrategyParams s1;
  StrategyParams s2;
  Payoffs payoffs;
};

/// Profiles sharing (theta1, theta2); they differ only in phases.
struct NashFamily {
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::size_t members = 0;
  double min_payoff_a = 0.0, max_payoff_a = 0.0;
  double min_payoff_b = 0.0, max_payoff_b = 0.0;
};

struct NashResult {
  std::vector<NashProfile> profiles;
  double epsilon = kNashEpsilon;
  StrategyGrid grid = StrategyGrid::uniform();

  std::vector<NashFamily> families() const {
    std::vector<NashFamily> out;
    for (const auto& p : profiles) {
      auto it = std::find_if(out.begin(), out.end(), [&](const NashFamily& f) {
        return f.theta1 == p.s1.theta && f.theta2 == p.s2.theta;
      });
      if (it == out.end()) {
        out.push_back({p.s1.theta, p.s2.theta, 1, p.payoffs.a, p.payoffs.a, p.payoffs.b,
                       p.payoffs.b});
        continue;
      }
      ++it->members;
      it->min_payoff_a = std::min(it->min_payoff_a, p.payoffs.a);
      it->max_payoff_a = std::max(it->max_payoff_a, p.payoffs.a);
      it->min_payoff_b = std::min(it->min_payoff_b, p.payoffs.b);
      it->max_payoff_b = std::max(it->max_payoff_b, p.payoffs.b);
    }
    std::sort(out.begin(), out.end(), [](const NashFamily& x, const NashFamily& y) {
      return std::pair(x.theta1, x.theta2) < std::pair(y.theta1, y.theta2);
    });
    return out;
  }

  bool contains(const StrategyParams& s1, const StrategyParams& s2) const {
    return std::any_of(profiles.begin(), profiles.end(), [&](const NashProfile& p) {
      return std::abs(p.s1.theta - s1.theta) <= kConstructionTol &&
             std::abs(p.s1.phi - s1.phi) <= kConstructionTol &&
             std::abs(p.s2.theta - s2.theta) <= kConstructionTol &&
             std::abs(p.s2.phi - s2.phi) <= kConstructionTol;
    });
  }
};

/// Exhaustive scan of grid x grid for profiles where neither player gains
/// more than `epsilon` by a unilateral grid deviation. Output order is
/// lexicographic in (theta1, phi1, theta2, phi2).
inline NashResult find_nash(const GameConfig& cfg, const StrategyGrid& grid,
                            double epsilon = kNashEpsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw GridError("epsilon must be a finite non-negative number");
  }
  const QuantumGame game(cfg, grid.bounds());
  const auto strategies = grid.strategies();
  const std::size_t n = strategies.size();
  if (n == 0) throw GridError("empty strategy grid");

  std::vector<StrategyUnitary> unitaries;
  unitaries.reserve(n);
  for (const auto& s : strategies) unitaries.push_back(game.unitary(s));

  // table[i * n + j] = payoffs for Alice playing i, Bob playing j.
  std::vector<Payoffs> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = game.payoffs(unitaries[i], unitaries[j]);

  std::vector<double> best_a(n, -std::numeric_limits<double>::infinity());  // per Bob column
  std::vector<double> best_b(n, -std::numeric_limits<double>::infinity());  // per Alice row
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Payoffs& p = table[i * n + j];
      best_a[j] = std::max(best_a[j], p.a);
      best_b[i] = std::max(best_b[i], p.b);
    }
  }

  NashResult result{{}, epsilon, grid};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Payoffs& p = table[i * n + j];
      if (best_a[j] - p.a <= epsilon && best_b[i] - p.b <= epsilon) {
        result.profiles.push_back({strategies[i], strategies[j], p});
      }
    }
  }
  return result;
}

/// Largest unilateral gain available to each player from a profile.
struct DeviationCheck {
  Payoffs at_profile;
  double max_gain_a = 0.0;
  double max_gain_b = 0.0;
  StrategyParams best_deviation_a;
  StrategyParams best_deviation_b;

  bool is_nash(double epsilon) const { return max_gain_a <= epsilon && max_gain_b <= epsilon; }
};

/// Re-evaluates every unilateral grid deviation from (s1, s2) directly,
/// without the payoff table used by find_nash.
inline DeviationCheck check_deviations(const GameConfig& cfg, const StrategyGrid& grid,
                                       const StrategyParams& s1, const StrategyParams& s2) {
  const QuantumGame game(cfg, grid.bounds());
  DeviationCheck out;
  out.at_profile = game.payoffs(s1, s2);
  out.best_deviation_a = s1;
  out.best_deviation_b = s2;
  for (const auto& d : grid.strategies()) {
    const double gain_a = game.payoffs(d, s2).a - out.at_profile.a;
    if (gain_a > out.max_gain_a) {
      out.max_gain_a = gain_a;
      out.best_deviation_a = d;
    }
    const double gain_b = game.payoffs(s1, d).b - out.at_profile.b;
    if (gain_b > out.max_gain_b) {
      out.max_gain_b = gain_b;
      out.best_deviation_b = d;
    }
  }
  return out;
}

/// True when every listed profile survives an independent deviation check.
inline bool certify(const GameConfig& cfg, const NashResult& result) {
  return std::all_of(result.profiles.begin(), result.profiles.end(), [&](const NashProfile& p) {
    return check_deviations(cfg, result.grid, p.s1, p.s2).is_nash(result.epsilon);
  });
}

// ---------------------------------------------------------------------------
// Closed-form Prisoner's Dilemma equilibria
// ---------------------------------------------------------------------------

/// A closed-form equilibrium. Phases are absent where the payoff does not
/// depend on them (any phase on the grid qualifies).
struct AnalyticEquilibrium {
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::optional<double> phi1;
  std::optional<double> phi2;
  Payoffs payoffs;
};

inline double sin2_half(double x) {
  const double s = std::sin(x / 2);
  return s * s;
}

namespace detail {

// Mutual cooperation is an equilibrium iff sin^2(x/2) >= 2/3 and mutual
// defection iff sin^2(x/2) <= 1/3; nothing in between.
inline std::optional<std::vector<AnalyticEquilibrium>> single_entangler_ne(double x) {
  const double s2 = sin2_half(x);
  std::vector<AnalyticEquilibrium> out;
  if (s2 >= 2.0 / 3.0 - kConstructionTol) {
    const double v = 3.0 - 2.0 * s2;
    out.push_back({0.0, 0.0, std::nullopt, std::nullopt, {v, v}});
  }
  if (s2 <= 1.0 / 3.0 + kConstructionTol) {
    const double v = 1.0 + 2.0 * s2;
    out.push_back({kPi, kPi, std::nullopt, std::nullopt, {v, v}});
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace detail

/// Closed-form equilibrium set of the Prisoner's Dilemma for the config's
/// regime, or nullopt where no closed form is known (intermediate
/// sin^2 band, or EE away from gamma = delta = pi/2).
inline std::optional<std::vector<AnalyticEquilibrium>> analytic_ne(const GameConfig& cfg) {
  if (!(cfg.bimatrix == PayoffBimatrix::prisoners_dilemma())) {
    throw UnsupportedConfiguration("closed-form equilibria require the Prisoner's Dilemma bimatrix");
  }
  cfg.validate();
  switch (classify_regime(cfg.gamma, cfg.delta)) {
    case RegimeLabel::PP:
      return std::vector<AnalyticEquilibrium>{{kPi, kPi, std::nullopt, std::nullopt, {1.0, 1.0}}};
    case RegimeLabel::PE:
      return detail::single_entangler_ne(cfg.delta);
    case RegimeLabel::EP:
      return detail::single_entangler_ne(cfg.gamma);
    case RegimeLabel::EE:
      if (std::abs(cfg.gamma - kPi / 2) <= kConstructionTol &&
          std::abs(cfg.delta - kPi / 2) <= kConstructionTol) {
        return std::vector<AnalyticEquilibrium>{{0.0, 0.0, kPi / 2, kPi / 2, {3.0, 3.0}}};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Payoff ordering
// ---------------------------------------------------------------------------

enum class Verdict { Pass, Boundary, Fail };

inline constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Boundary: return "boundary";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

struct Comparison {
  std::string relation;  // e.g. "PP < PE"
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs for '<', |rhs - lhs| for '='
  Verdict verdict = Verdict::Fail;
};

enum class SampleStatus { Verified, Boundary, Failed, NoPureNe };

inline constexpr std::string_view to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Verified: return "verified";
    case SampleStatus::Boundary: return "boundary";
    case SampleStatus::Failed: return "failed";
    case SampleStatus::NoPureNe: return "no pure NE";
  }
  return "?";
}

/// One regime's equilibrium payoff and whether the profile is a grid NE.
struct RegimePoint {
  RegimeLabel regime = RegimeLabel::PP;
  double gamma = 0.0;
  double delta = 0.0;
  StrategyParams strategy;  // played by both players
  double payoff = 0.0;      // Alice's; Bob's is equal by symmetry
  bool certified = false;
};

struct SampleReport {
  double x = 0.0;
  double sin2 = 0.0;
  SampleStatus status = SampleStatus::NoPureNe;
  std::vector<RegimePoint> points;  // PP, PE, EP, EE when verifiable
  std::vector<Comparison> comparisons;
};

struct OrderingReport {
  std::vector<SampleReport> samples;
  double epsilon = kNashEpsilon;

  std::size_t verifiable_count() const {
    return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const auto& s) {
      return s.status != SampleStatus::NoPureNe;
    }));
  }
  /// All non-boundary comparisons pass and at least one sample was checked.
  bool passed() const {
    if (verifiable_count() == 0) return false;
    return std::none_of(samples.begin(), samples.end(),
                        [](const auto& s) { return s.status == SampleStatus::Failed; });
  }
};

namespace detail {

inline Comparison strictly_less(std::string relation, double lhs, double rhs) {
  Comparison c{std::move(relation), lhs, rhs, rhs - lhs, Verdict::Fail};
  if (c.margin > kPayoffTol) {
    c.verdict = Verdict::Pass;
  } else if (std::abs(c.margin) <= kPayoffTol) {
    c.verdict = Verdict::Boundary;
  }
  return c;
}

inline Comparison equal(std::string relation, double lhs, double rhs, double tol) {
  Comparison c{std::move(relation), lhs, rhs, std::abs(rhs - lhs), Verdict::Fail};
  if (c.margin <= tol) c.verdict = Verdict::Pass;
  return c;
}

inline RegimePoint regime_point(RegimeLabel regime, double gamma, double delta,
                                const StrategyParams& s, const StrategyGrid& grid,
                                double epsilon) {
  GameConfig cfg = default_pd_config();
  cfg.gamma = gamma;
  cfg.delta = delta;
  const auto dev = check_deviations(cfg, grid, s, s);
  return {regime, gamma, delta, s, dev.at_profile.a, dev.is_nash(epsilon)};
}

}  // namespace detail

/// For each sample x in (0, pi], compares the Prisoner's Dilemma
/// equilibrium payoffs PP (gamma = delta = 0), PE (delta = x), EP (gamma = x)
/// and EE (gamma = delta = pi/2). Each regime payoff is evaluated through the
/// trace at its closed-form profile and certified as a grid NE.
inline OrderingReport verify_ordering(const std::vector<double>& samples, const StrategyGrid& grid,
                                      double epsilon = kNashEpsilon) {
  for (double x : samples) {
    detail::require_finite(x, "samples");
    if (x <= kConstructionTol || x > kPi + kConstructionTol) {
      throw DomainError("samples", "sample " + detail::format_double(x) + " outside (0, pi]");
    }
  }
  OrderingReport report{{}, epsilon};
  const StrategyParams defect{kPi, 0.0};
  const StrategyParams cooperate{0.0, 0.0};
  const StrategyParams quantum{0.0, kPi / 2};

  for (double x : samples) {
    SampleReport sr;
    sr.x = x;
    sr.sin2 = sin2_half(x);
    std::optional<StrategyParams> branch;
    if (sr.sin2 >= 2.0 / 3.0 - kConstructionTol) {
      branch = cooperate;
    } else if (sr.sin2 <= 1.0 / 3.0 + kConstructionTol) {
      branch = defect;
    }
    if (!branch) {
      report.samples.push_back(sr);
      continue;
    }

    const auto pp = detail::regime_point(RegimeLabel::PP, 0.0, 0.0, defect, grid, epsilon);
    const auto pe = detail::regime_point(RegimeLabel::PE, 0.0, x, *branch, grid, epsilon);
    const auto ep = detail::regime_point(RegimeLabel::EP, x, 0.0, *branch, grid, epsilon);
    const auto ee =
        detail::regime_point(RegimeLabel::EE, kPi / 2, kPi / 2, quantum, grid, epsilon);
    sr.points = {pp, pe, ep, ee};

    sr.comparisons.push_back(detail::strictly_less("PP < PE", pp.payoff, pe.payoff));
    sr.comparisons.push_back(detail::equal("PE = EP", pe.payoff, ep.payoff, kConstructionTol));
    sr.comparisons.push_back(
        detail::strictly_less("max(PE, EP) < EE", std::max(pe.payoff, ep.payoff), ee.payoff));

    const bool certified = pp.certified && pe.certified && ep.certified && ee.certified;
    const bool any_fail = std::any_of(sr.comparisons.begin(), sr.comparisons.end(),
                                      [](const Comparison& c) { return c.verdict == Verdict::Fail; });
    const bool any_boundary =
        std::any_of(sr.comparisons.begin(), sr.comparisons.end(),
                    [](const Comparison& c) { return c.verdict == Verdict::Boundary; });
    if (!certified || any_fail) {
      sr.status = SampleStatus::Failed;
    } else if (any_boundary) {
      sr.status = SampleStatus::Boundary;
    } else {
      sr.status = SampleStatus::Verified;
    }
    report.samples.push_back(std::move(sr));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
  double gamma = 0.0;
  double delta = 0.0;
  Payoffs payoffs;
  RegimeLabel regime = RegimeLabel::PP;
};

/// Payoffs of a fixed strategy profile over a (gamma, delta) grid. Rows are
/// ordered by gamma, then delta, both ascending.
inline std::vector<SweepRow> payoff_sweep(const GameConfig& cfg_template,
                                          std::vector<double> gamma_grid,
                                          std::vector<double> delta_grid,
                                          const StrategyParams& s1, const StrategyParams& s2) {
  for (double g : gamma_grid) detail::require_in_range(g, 0.0, kPi, "gamma");
  for (double d : delta_grid) detail::require_in_range(d, 0.0, kPi, "delta");
  s1.validate({}, "s1");
  s2.validate({}, "s2");
  std::sort(gamma_grid.begin(), gamma_grid.end());
  std::sort(delta_grid.begin(), delta_grid.end());

  std::vector<SweepRow> rows;
  rows.reserve(gamma_grid.size() * delta_grid.size());
  for (double g : gamma_grid) {
    for (double d : delta_grid) {
      GameConfig cfg = cfg_template;
      cfg.gamma = g;
      cfg.delta = d;
      const QuantumGame game(cfg);
      rows.push_back({g, d, game.payoffs(s1, s2), classify_regime(g, d)});
    }
  }
  return rows;
}

}  // namespace qgame
