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

// Entangled measurement bases, payoff operators and Born-rule payoffs.
//
// The arbiter measures in a delta-parameterized orthonormal basis
//   |psi_CC> = cos(d/2)|CC> + i sin(d/2)|DD>
//   |psi_DD> = cos(d/2)|DD> + i sin(d/2)|CC>
//   |psi_DC> = cos(d/2)|DC> - i sin(d/2)|CD>
//   |psi_CD> = cos(d/2)|CD> - i sin(d/2)|DC>
// delta = 0 is the computational basis; delta = gamma matches the basis
// J(gamma)|ij> of the standard entangling-gate quantization.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qgame/quantum_core.hpp"

namespace qgame {

enum class Outcome : int { CC = 0, CD = 1, DC = 2, DD = 3 };

inline constexpr std::array<Outcome, 4> kOutcomes = {Outcome::CC, Outcome::CD,
                                                     Outcome::DC, Outcome::DD};

inline constexpr std::size_t index_of(Outcome o) { return static_cast<std::size_t>(o); }

inline constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::CC: return "CC";
    case Outcome::CD: return "CD";
    case Outcome::DC: return "DC";
    case Outcome::DD: return "DD";
  }
  return "?";
}

/// Alice's move (0 = C, 1 = D) for an outcome.
inline constexpr int alice_move(Outcome o) { return index_of(o) / 2; }
/// Bob's move (0 = C, 1 = D) for an outcome.
inline constexpr int bob_move(Outcome o) { return index_of(o) % 2; }

enum class Player { A, B };

inline constexpr std::string_view to_string(Player p) { return p == Player::A ? "A" : "B"; }

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Matrix4 = std::array<std::array<Complex, 4>, 4>;

/// Real 2x2 bimatrix. Rows index Alice's move (C, D), columns Bob's move.
struct PayoffBimatrix {
  Matrix2 a{};
  Matrix2 b{};

  /// The Prisoner's Dilemma: (3,3) (0,5) / (5,0) (1,1).
  static PayoffBimatrix prisoners_dilemma() {
    return PayoffBimatrix{{{{3.0, 0.0}, {5.0, 1.0}}}, {{{3.0, 5.0}, {0.0, 1.0}}}};
  }

  /// Symmetric game built from Alice's matrix: b = transpose(a).
  static PayoffBimatrix symmetric(const Matrix2& alice) {
    return PayoffBimatrix{alice, {{{alice[0][0], alice[1][0]}, {alice[0][1], alice[1][1]}}}};
  }

  double entry(Player p, Outcome o) const {
    const auto& m = p == Player::A ? a : b;
    return m[alice_move(o)][bob_move(o)];
  }

  bool is_symmetric() const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (b[i][j] != a[j][i]) return false;
    return true;
  }

  void validate() const {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        detail::require_finite(a[i][j], "payoffs.alice");
        detail::require_finite(b[i][j], "payoffs.bob");
      }
    }
  }

  friend bool operator==(const PayoffBimatrix&, const PayoffBimatrix&) = default;
};

/// Four orthonormal outcome vectors, indexed by Outcome.
struct MeasurementBasis {
  double delta = 0.0;
  std::array<StateVector, 4> vectors;

  const StateVector& operator[](Outcome o) const { return vectors[index_of(o)]; }

  /// Max elementwise deviation of the Gram matrix from the identity.
  double orthonormality_error() const {
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        err = std::max(err, std::abs(vectors[i].inner(vectors[j]) -
                                     Complex(i == j ? 1.0 : 0.0)));
    return err;
  }

  /// Max elementwise deviation of sum_o |v_o><v_o| from the identity.
  double completeness_error() const {
    double err = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        Complex s{};
        for (const auto& v : vectors) s += v[r] * std::conj(v[c]);
        err = std::max(err, std::abs(s - Complex(r == c ? 1.0 : 0.0)));
      }
    }
    return err;
  }
};

inline MeasurementBasis build_basis(double delta) {
  detail::require_in_range(delta, 0.0, kPi, "delta");
  const Complex c(std::cos(delta / 2), 0.0);
  const Complex is(0.0, std::sin(delta / 2));
  const Complex z{};
  return MeasurementBasis{
      delta,
      {StateVector::from_amplitudes({c, z, z, is}),     // CC
       StateVector::from_amplitudes({z, c, -is, z}),    // CD
       StateVector::from_amplitudes({z, -is, c, z}),    // DC
       StateVector::from_amplitudes({is, z, z, c})}};  // DD
}

/// sum_o weight(o) |psi_o><psi_o| for one player.
struct PayoffOperator {
  MeasurementBasis basis;
  std::array<double, 4> weights{};

  double weight(Outcome o) const { return weights[index_of(o)]; }

  /// Dense 4x4 form, for trace-level checks.
  Matrix4 matrix() const {
    Matrix4 m{};
    for (Outcome o : kOutcomes) {
      const auto& v = basis[o];
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] += weight(o) * v[r] * std::conj(v[c]);
    }
    return m;
  }
};

inline std::pair<PayoffOperator, PayoffOperator> payoff_operators(
    const PayoffBimatrix& m, const MeasurementBasis& basis) {
  PayoffOperator alice{basis, {}};
  PayoffOperator bob{basis, {}};
  for (Outcome o : kOutcomes) {
    alice.weights[index_of(o)] = m.entry(Player::A, o);
    bob.weights[index_of(o)] = m.entry(Player::B, o);
  }
  return {alice, bob};
}

/// Probability per outcome, indexed by Outcome.
struct OutcomeProbabilities {
  std::array<double, 4> p{};

  double operator[](Outcome o) const { return p[index_of(o)]; }
  double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

/// Raised when a Born probability strays outside [0, 1] by more than the
/// construction tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p(o) = |<psi_o|psi>|^2. Values within tolerance of [0, 1] are clamped;
/// anything further out is an error.
inline OutcomeProbabilities outcome_probabilities(const StateVector& psi,
                                                  const MeasurementBasis& basis) {
  OutcomeProbabilities out;
  for (Outcome o : kOutcomes) {
    double p = std::norm(basis[o].inner(psi));
    if (p < -kConstructionTol || p > 1.0 + kConstructionTol) {
      throw NumericalError("probability of " + std::string(to_string(o)) + " = " +
                           detail::format_double(p) + " outside [0, 1]");
    }
    out.p[index_of(o)] = std::clamp(p, 0.0, 1.0);
  }
  return out;
}

inline double expected_payoff(const OutcomeProbabilities& probs, const PayoffOperator& op) {
  double s = 0.0;
  for (Outcome o : kOutcomes) s += op.weight(o) * probs[o];
  return s;
}

/// Tr(P rho) for rho = |psi><psi|, evaluated through the Born decomposition.
inline double expected_payoff(const StateVector& psi, const PayoffOperator& op) {
  return expected_payoff(outcome_probabilities(psi, op.basis), op);
}

// ---------------------------------------------------------------------------
// Closed forms.
//
// Expanding the Born probabilities symbolically with c_k = cos(theta_k/2),
// s_k = sin(theta_k/2), h- = (gamma - delta)/2, h+ = (gamma + delta)/2 and
// S = phi1 + phi2 gives
//   P_CC = [c1 c2 cos h- cos S]^2 + [c1 c2 cos h+ sin S + s1 s2 sin h-]^2
//   P_DD = [s1 s2 cos h- + c1 c2 sin h+ sin S]^2 + [c1 c2 sin h- cos S]^2
//   P_DC = [s1 c2 cos h- cos phi2 - c1 s2 sin h+ sin phi1]^2
//        + [s1 c2 cos h+ sin phi2 - c1 s2 sin h- cos phi1]^2
//   P_CD = P_DC with (theta1, phi1) <-> (theta2, phi2)
// These never touch a state vector, so they serve as an independent check on
// the trace route.
// ---------------------------------------------------------------------------

inline OutcomeProbabilities closed_form_probabilities(double gamma, double delta,
                                                      const StrategyParams& s1,
                                                      const StrategyParams& s2) {
  detail::require_in_range(gamma, 0.0, kPi, "gamma");
  detail::require_in_range(delta, 0.0, kPi, "delta");
  s1.validate({}, "s1");
  s2.validate({}, "s2");

  const double c1 = std::cos(s1.theta / 2), sn1 = std::sin(s1.theta / 2);
  const double c2 = std::cos(s2.theta / 2), sn2 = std::sin(s2.theta / 2);
  const double hm = (gamma - delta) / 2, hp = (gamma + delta) / 2;
  const double cm = std::cos(hm), sm = std::sin(hm);
  const double cp = std::cos(hp), sp = std::sin(hp);
  const double sum = s1.phi + s2.phi;
  const double cc = c1 * c2, ss = sn1 * sn2;

  auto sq = [](double x) { return x * x; };

  OutcomeProbabilities out;
  out.p[index_of(Outcome::CC)] =
      sq(cc * cm * std::cos(sum)) + sq(cc * cp * std::sin(sum) + ss * sm);
  out.p[index_of(Outcome::DD)] =
      sq(ss * cm + cc * sp * std::sin(sum)) + sq(cc * sm * std::cos(sum));
  out.p[index_of(Outcome::DC)] =
      sq(sn1 * c2 * cm * std::cos(s2.phi) - c1 * sn2 * sp * std::sin(s1.phi)) +
      sq(sn1 * c2 * cp * std::sin(s2.phi) - c1 * sn2 * sm * std::cos(s1.phi));
  out.p[index_of(Outcome::CD)] =
      sq(c1 * sn2 * cm * std::cos(s1.phi) - sn1 * c2 * sp * std::sin(s2.phi)) +
      sq(c1 * sn2 * cp * std::sin(s1.phi) - sn1 * c2 * sm * std::cos(s2.phi));
  return out;
}

inline double closed_form_payoff(Player player, double gamma, double delta,
                                 const StrategyParams& s1, const StrategyParams& s2,
                                 const PayoffBimatrix& m = PayoffBimatrix::prisoners_dilemma()) {
  const auto probs = closed_form_probabilities(gamma, delta, s1, s2);
  double s = 0.0;
  for (Outcome o : kOutcomes) s += m.entry(player, o) * probs[o];
  return s;
}

inline double closed_form_payoff_a(double gamma, double delta, const StrategyParams& s1,
                                   const StrategyParams& s2,
                                   const PayoffBimatrix& m = PayoffBimatrix::prisoners_dilemma()) {
  return closed_form_payoff(Player::A, gamma, delta, s1, s2, m);
}

/// Bob's payoff by interchanging the players' strategies in Alice's form.
/// Only meaningful for symmetric bimatrices.
inline double closed_form_payoff_b(double gamma, double delta, const StrategyParams& s1,
                                   const StrategyParams& s2,
                                   const PayoffBimatrix& m = PayoffBimatrix::prisoners_dilemma()) {
  if (!m.is_symmetric()) {
    return closed_form_payoff(Player::B, gamma, delta, s1, s2, m);
  }
  return closed_form_payoff_a(gamma, delta, s2, s1, m);
}

/// Literal transcription of the printed Prisoner's Dilemma expansion of
/// Alice's payoff, including its cos(2 delta (phi1 + phi2)) and cos(2 phi1)
/// terms. It does not agree with the trace payoff away from a few special
/// points and is kept only to quantify that discrepancy.
inline double printed_closed_form_payoff_a(double gamma, double delta,
                                           const StrategyParams& s1,
                                           const StrategyParams& s2) {
  using std::cos;
  using std::sin;
  const double t1 = s1.theta, t2 = s2.theta, p1 = s1.phi, p2 = s2.phi;
  auto sq = [](double x) { return x * x; };
  return sq(sin(t1 / 2)) * sq(sin(t2 / 2)) *
             (sq(cos((gamma + delta) / 2)) + 3 * sq(sin((gamma - delta) / 2))) +
         sq(cos(t1 / 2)) * sq(cos(t2 / 2)) *
             (2 + cos(gamma) * cos(delta) +
              2 * cos(2 * delta * (p1 + p2)) * sin(gamma) * sin(delta)) -
         sin(t1) * sin(t2) * sin(p1 + p2) * (sin(gamma) - sin(delta)) +
         1.25 * (1 - cos(t1) * cos(t2)) +
         1.25 * (cos(t2) - cos(t1)) *
             (cos(gamma) * cos(delta) + cos(2 * p1) * sin(gamma) * sin(delta));
}

}  // namespace qgame
