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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "addcirc/additive.hpp"
#include "addcirc/multiplicative.hpp"

namespace addcirc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Reads an angle literal: a decimal number, or a multiple/fraction of pi
 * ("pi", "-pi/4", "3pi/2", "3*pi/4", "0.5*pi").
 *
 * @throws std::invalid_argument on malformed input.
 */
double parse_angle_literal(std::string_view text);

/// Shortest-round-trip-safe decimal form (17 significant digits).
std::string format_angle(double radians);

// Additive files:
//   dims N
//   ry i j θ | rz k θ | swap i j | phase φ
// Multiplicative files:
//   qubits n
//   ry q θ | rz q θ | x q | cx c t | mcx c1,c2,... t | mcry c1,... t θ
//   cphase c1,... θ | phase φ
// A lone "-" stands for an empty control list. '#' starts a comment.

AdditiveCircuit parse_additive(std::string_view text);
std::string emit_additive(const AdditiveCircuit& circuit);

MultCircuit parse_mult(std::string_view text);
std::string emit_mult(const MultCircuit& circuit);

/// Dispatches on the header keyword.
std::variant<AdditiveCircuit, MultCircuit> parse_any(std::string_view text);

}  // namespace addcirc
