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
#include <variant>
#include <vector>

#include "addcirc/angle.hpp"

namespace addcirc {

/// Thrown when a gate or circuit violates its structural invariants.
class CircuitInvalidity : public std::invalid_argument {
 public:
  explicit CircuitInvalidity(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Rotation mixing dimensions `first` and `second`; `first` is the leading
/// row of the 2x2 block [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]].
struct RyPlus {
  std::size_t first;
  std::size_t second;
  Angle angle;
  friend bool operator==(const RyPlus&, const RyPlus&) = default;
};

/// Phase e^{iθ} on a single dimension.
struct RzPlus {
  std::size_t dim;
  Angle angle;
  friend bool operator==(const RzPlus&, const RzPlus&) = default;
};

/// Transposition of two dimensions.
struct XPlus {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const XPlus&, const XPlus&) = default;
};

using AdditiveGate = std::variant<RyPlus, RzPlus, XPlus>;

/// Dimensions touched by the gate: one for RzPlus, two otherwise.
std::vector<std::size_t> touched_dims(const AdditiveGate& gate);

std::string to_string(const AdditiveGate& gate);

/**
 * A circuit over an N-dimensional state space, gates applied in list order.
 *
 * N need not be a power of two. The scalar e^{i global_phase} multiplies the
 * whole unitary.
 */
class AdditiveCircuit {
 public:
  /// @throws CircuitInvalidity if dim == 0.
  explicit AdditiveCircuit(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<AdditiveGate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  Angle global_phase() const { return global_phase_; }

  /// Appends after validating indices against dim().
  AdditiveCircuit& append(const AdditiveGate& gate);
  void add_global_phase(Angle phase) { global_phase_ += phase; }
  void set_global_phase(Angle phase) { global_phase_ = phase; }

  /// Throws unless every index is in range and two-dimension gates act on
  /// distinct dimensions.
  void validate(const AdditiveGate& gate) const;

  friend bool operator==(const AdditiveCircuit&, const AdditiveCircuit&) =
      default;

 private:
  std::size_t dim_;
  std::vector<AdditiveGate> gates_;
  Angle global_phase_;
};

AdditiveCircuit new_additive_circuit(std::size_t dim);

/// Non-mutating append.
AdditiveCircuit append(AdditiveCircuit circuit, const AdditiveGate& gate);

/// Reversed gate order with negated angles and global phase.
AdditiveCircuit inverse(const AdditiveCircuit& circuit);

}  // namespace addcirc
