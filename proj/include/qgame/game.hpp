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

#pragma once

#include "qgame/gamespec.hpp"
#include "qgame/measurement.hpp"
#include "qgame/quantum_core.hpp"

namespace qgame {

struct Payoffs {
  double a = 0.0;
  double b = 0.0;

  double of(Player p) const { return p == Player::A ? a : b; }
};

/// A configured game with its initial state and payoff operators prepared
/// once, so repeated evaluations only apply the strategies and measure.
class QuantumGame {
 public:
  explicit QuantumGame(const GameConfig& cfg, const StrategyBounds& bounds = {})
      : cfg_((cfg.validate(), cfg)),
        bounds_(bounds),
        initial_(make_initial_state(cfg.gamma)),
        operators_(payoff_operators(cfg.bimatrix, build_basis(cfg.delta))) {}

  const GameConfig& config() const { return cfg_; }
  const StrategyBounds& bounds() const { return bounds_; }
  const StateVector& initial_state() const { return initial_; }
  const PayoffOperator& operator_for(Player p) const {
    return p == Player::A ? operators_.first : operators_.second;
  }
  const MeasurementBasis& basis() const { return operators_.first.basis; }

  StateVector final_state(const StrategyUnitary& u1, const StrategyUnitary& u2) const {
    return apply_strategies(u1, u2, initial_);
  }

  StateVector final_state(const StrategyParams& s1, const StrategyParams& s2) const {
    return final_state(unitary(s1), unitary(s2));
  }

  OutcomeProbabilities probabilities(const StrategyParams& s1, const StrategyParams& s2) const {
    return outcome_probabilities(final_state(s1, s2), basis());
  }

  Payoffs payoffs(const StrategyUnitary& u1, const StrategyUnitary& u2) const {
    const auto probs = outcome_probabilities(final_state(u1, u2), basis());
    return {expected_payoff(probs, operators_.first), expected_payoff(probs, operators_.second)};
  }

  Payoffs payoffs(const StrategyParams& s1, const StrategyParams& s2) const {
    return payoffs(unitary(s1), unitary(s2));
  }

  StrategyUnitary unitary(const StrategyParams& s) const { return strategy_unitary(s, bounds_); }

 private:
  GameConfig cfg_;
  StrategyBounds bounds_;
  StateVector initial_;
  std::pair<PayoffOperator, PayoffOperator> operators_;
};

}  // namespace qgame
