// Copyright 2026 The addcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numbers>

namespace addcirc {

inline constexpr double kPi = std::numbers::pi;

/// Period of a Y rotation's half-angle matrix: Ry(θ + 2π) = -Ry(θ).
inline constexpr double kRotationPeriod = 4.0 * kPi;
/// Period of a phase e^{iθ}.
inline constexpr double kPhasePeriod = 2.0 * kPi;
/// Threshold below which a canonical angle counts as zero.
inline constexpr double kAngleZeroTol = 1e-12;

/**
 * A rotation angle in radians.
 *
 * The stored value is never reduced; reductions modulo a period only happen
 * in comparisons (`is_zero`, `equivalent`). Construction rejects NaN and
 * infinities.
 */
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  double radians() const { return value_; }

  /// Representative of the value in (-period/2, period/2].
  double canonical(double period) const;

  bool is_zero(double period, double tol = kAngleZeroTol) const;
  bool equivalent(
      const Angle& other, double period, double tol = kAngleZeroTol) const;

  Angle operator-() const { return Angle(-value_); }
  Angle operator+(const Angle& o) const { return Angle(value_ + o.value_); }
  Angle operator-(const Angle& o) const { return Angle(value_ - o.value_); }
  Angle operator*(double k) const { return Angle(value_ * k); }
  Angle operator/(double k) const { return Angle(value_ / k); }
  Angle& operator+=(const Angle& o) { return *this = *this + o; }

  /// Exact comparison of stored values.
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  double value_ = 0.0;
};

}  // namespace addcirc
