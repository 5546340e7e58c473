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

#include "addcirc/angle.hpp"

#include <cmath>
#include <stdexcept>

namespace addcirc {

Angle::Angle(double radians) : value_(radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
}

double Angle::canonical(double period) const {
  double r = std::fmod(value_, period);
  if (r > period / 2) r -= period;
  if (r <= -period / 2) r += period;
  return r;
}

bool Angle::is_zero(double period, double tol) const {
  return std::abs(canonical(period)) < tol;
}

bool Angle::equivalent(const Angle& other, double period, double tol) const {
  return (*this - other).is_zero(period, tol);
}

}  // namespace addcirc
