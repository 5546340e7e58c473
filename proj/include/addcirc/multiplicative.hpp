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
#include <string>
#include <variant>
#include <vector>

#include "addcirc/additive.hpp"
#include "addcirc/angle.hpp"

namespace addcirc {

using Qubit = unsigned;

// Qubit q is bit q of a basis index (little endian).

struct Ry {
  Qubit qubit;
  Angle angle;
  friend bool operator==(const Ry&, const Ry&) = default;
};

/// diag(e^{-iθ/2}, e^{iθ/2}).
struct Rz {
  Qubit qubit;
  Angle angle;
  friend bool operator==(const Rz&, const Rz&) = default;
};

struct X {
  Qubit qubit;
  friend bool operator==(const X&, const X&) = default;
};

struct CX {
  Qubit control;
  Qubit target;
  friend bool operator==(const CX&, const CX&) = default;
};

struct MCX {
  std::vector<Qubit> controls;
  Qubit target;
  friend bool operator==(const MCX&, const MCX&) = default;
};

struct MCRy {
  std::vector<Qubit> controls;
  Qubit target;
  Angle angle;
  friend bool operator==(const MCRy&, const MCRy&) = default;
};

/// e^{iθ} on every basis state whose control bits are all set.
struct CPhase {
  std::vector<Qubit> controls;
  Angle angle;
  friend bool operator==(const CPhase&, const CPhase&) = default;
};

using MultGate = std::variant<Ry, Rz, X, CX, MCX, MCRy, CPhase>;

/// Lowercase kind name ("ry", "mcx", ...), as used in files and reports.
std::string gate_kind(const MultGate& gate);

std::string to_string(const MultGate& gate);

/// Throws CircuitInvalidity on out-of-range or repeated qubits, or a target
/// among the controls.
void validate_gate(const MultGate& gate, unsigned n_qubits);

class MultCircuit {
 public:
  /// @throws CircuitInvalidity if n_qubits == 0.
  explicit MultCircuit(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const std::vector<MultGate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  Angle global_phase() const { return global_phase_; }

  MultCircuit& append(const MultGate& gate);
  MultCircuit& append(const std::vector<MultGate>& gates);
  void add_global_phase(Angle phase) { global_phase_ += phase; }

  friend bool operator==(const MultCircuit&, const MultCircuit&) = default;

 private:
  unsigned n_qubits_;
  std::vector<MultGate> gates_;
  Angle global_phase_;
};

/// Upper bound on qubit counts accepted anywhere in the library.
inline constexpr unsigned kMaxQubits = 16;

}  // namespace addcirc
