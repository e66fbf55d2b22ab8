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

// Two-qubit state construction and two-parameter strategy unitaries for
// quantized 2x2 games. Qubit 0 belongs to Alice (row player), qubit 1 to Bob.
// Basis ordering is (|CC>, |CD>, |DC>, |DD>) with Alice's move first.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgame {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Tolerance for construction-time invariants (norms, unitarity, bounds).
inline constexpr double kConstructionTol = 1e-12;
/// Tolerance for comparing payoffs produced by accumulated arithmetic.
inline constexpr double kPayoffTol = 1e-9;

/// Raised when an angle or other scalar parameter lies outside its range.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string parameter, const std::string& what)
      : std::domain_error(what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void require_finite(double v, const std::string& name) {
  if (!std::isfinite(v)) {
    throw DomainError(name, name + " must be finite, got " + format_double(v));
  }
}

// Closed interval check with a small slack so that values such as a degree
// conversion of 180 are still accepted as pi.
inline void require_in_range(double v, double lo, double hi,
                             const std::string& name) {
  require_finite(v, name);
  if (v < lo - kConstructionTol || v > hi + kConstructionTol) {
    throw DomainError(name, name + " = " + format_double(v) +
                                " outside [" + format_double(lo) + ", " +
                                format_double(hi) + "]");
  }
}

}  // namespace detail

/// Angular ranges for the two strategy parameters. The phase bound is
/// configurable; the default follows the usual two-parameter convention.
struct StrategyBounds {
  double theta_max = kPi;
  double phi_max = kPi / 2;
};

/// One player's strategy point (theta, phi), radians.
struct StrategyParams {
  double theta = 0.0;
  double phi = 0.0;

  void validate(const StrategyBounds& bounds = {},
                const std::string& who = "strategy") const {
    detail::require_in_range(theta, 0.0, bounds.theta_max, who + ".theta");
    detail::require_in_range(phi, 0.0, bounds.phi_max, who + ".phi");
  }

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;
};

/// Normalized amplitude vector over (|CC>, |CD>, |DC>, |DD>).
class StateVector {
 public:
  static constexpr std::size_t kDim = 4;
  using Amplitudes = std::array<Complex, kDim>;

  /// Validates finiteness and unit norm (within kConstructionTol).
  static StateVector from_amplitudes(const Amplitudes& amp) {
    double norm2 = 0.0;
    for (const auto& a : amp) {
      detail::require_finite(a.real(), "amplitude");
      detail::require_finite(a.imag(), "amplitude");
      norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kConstructionTol) {
      throw DomainError("amplitude", "state norm^2 = " +
                                         detail::format_double(norm2) +
                                         " is not 1");
    }
    return StateVector(amp);
  }

  /// Computational basis ket; index 0..3 in (CC, CD, DC, DD) order.
  static StateVector basis(std::size_t index) {
    if (index >= kDim) throw std::out_of_range("basis index out of range");
    Amplitudes amp{};
    amp[index] = 1.0;
    return StateVector(amp);
  }

  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  const Amplitudes& amplitudes() const { return amp_; }

  double norm_squared() const {
    double n = 0.0;
    for (const auto& a : amp_) n += std::norm(a);
    return n;
  }

  /// <this|other>
  Complex inner(const StateVector& other) const {
    Complex s{};
    for (std::size_t i = 0; i < kDim; ++i) s += std::conj(amp_[i]) * other.amp_[i];
    return s;
  }

  StateVector with_global_phase(double alpha) const {
    const Complex phase = std::polar(1.0, alpha);
    Amplitudes out = amp_;
    for (auto& a : out) a *= phase;
    return StateVector(out);
  }

 private:
  explicit StateVector(const Amplitudes& amp) : amp_(amp) {}
  Amplitudes amp_;
};

/// 2x2 single-qubit strategy. m[row][col], columns index the input basis
/// (C, D) and rows the output basis.
struct StrategyUnitary {
  std::array<std::array<Complex, 2>, 2> m{};

  StrategyUnitary() = default;
  explicit StrategyUnitary(const std::array<std::array<Complex, 2>, 2>& entries) : m(entries) {}

  static StrategyUnitary identity() {
    StrategyUnitary u;
    u.m[0][0] = 1.0;
    u.m[1][1] = 1.0;
    return u;
  }

  Complex determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  /// Largest elementwise deviation of U^dagger U from the identity.
  double unitarity_error() const {
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Complex s{};
        for (int k = 0; k < 2; ++k) s += std::conj(m[k][i]) * m[k][j];
        err = std::max(err, std::abs(s - Complex(i == j ? 1.0 : 0.0)));
      }
    }
    return err;
  }
};

/// cos(gamma/2)|CC> + i sin(gamma/2)|DD>, gamma in [0, pi].
inline StateVector make_initial_state(double gamma) {
  detail::require_in_range(gamma, 0.0, kPi, "gamma");
  return StateVector::from_amplitudes(
      {Complex(std::cos(gamma / 2), 0.0), Complex{}, Complex{},
       Complex(0.0, std::sin(gamma / 2))});
}

/// U = cos(theta/2) R + sin(theta/2) P with R = diag(e^{i phi}, e^{-i phi})
/// and P|C> = -|D>, P|D> = |C>.
inline StrategyUnitary strategy_unitary(const StrategyParams& s,
                                        const StrategyBounds& bounds = {}) {
  s.validate(bounds);
  const double c = std::cos(s.theta / 2);
  const double sn = std::sin(s.theta / 2);
  StrategyUnitary u;
  u.m[0][0] = Complex(c * std::cos(s.phi), c * std::sin(s.phi));
  u.m[1][0] = -sn;
  u.m[0][1] = sn;
  u.m[1][1] = std::conj(u.m[0][0]);
  return u;
}

/// (u1 (x) u2) psi, applied one qubit at a time.
inline StateVector apply_strategies(const StrategyUnitary& u1,
                                    const StrategyUnitary& u2,
                                    const StateVector& psi) {
  StateVector::Amplitudes tmp{};
  // Bob's qubit: index = 2*alice + bob.
  for (int a = 0; a < 2; ++a) {
    for (int out = 0; out < 2; ++out) {
      tmp[2 * a + out] = u2.m[out][0] * psi[2 * a] + u2.m[out][1] * psi[2 * a + 1];
    }
  }
  StateVector::Amplitudes res{};
  for (int b = 0; b < 2; ++b) {
    for (int out = 0; out < 2; ++out) {
      res[2 * out + b] = u1.m[out][0] * tmp[b] + u1.m[out][1] * tmp[2 + b];
    }
  }
  return StateVector::from_amplitudes(res);
}

inline StateVector final_state(double gamma, const StrategyParams& s1,
                               const StrategyParams& s2,
                               const StrategyBounds& bounds = {}) {
  return apply_strategies(strategy_unitary(s1, bounds),
                          strategy_unitary(s2, bounds),
                          make_initial_state(gamma));
}

}  // namespace qgame
