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

#include "addcirc/multiplicative.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

namespace {

std::string join_qubits(const std::vector<Qubit>& qubits) {
  if (qubits.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(qubits[i]);
  }
  return out;
}

void check_qubit(Qubit q, unsigned n_qubits) {
  if (q >= n_qubits) {
    throw CircuitInvalidity(
        "qubit " + std::to_string(q) + " out of range for " +
        std::to_string(n_qubits) + " qubits");
  }
}

void check_controlled(
    const std::vector<Qubit>& controls, std::optional<Qubit> target,
    unsigned n_qubits) {
  std::vector<Qubit> seen;
  for (Qubit c : controls) {
    check_qubit(c, n_qubits);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
      throw CircuitInvalidity("repeated control qubit " + std::to_string(c));
    }
    seen.push_back(c);
    if (target && c == *target) {
      throw CircuitInvalidity("control equals target");
    }
  }
  if (target) check_qubit(*target, n_qubits);
}

}  // namespace

std::string gate_kind(const MultGate& gate) {
  return std::visit(
      overloaded{
          [](const Ry&) { return "ry"; }, [](const Rz&) { return "rz"; },
          [](const X&) { return "x"; }, [](const CX&) { return "cx"; },
          [](const MCX&) { return "mcx"; }, [](const MCRy&) { return "mcry"; },
          [](const CPhase&) { return "cphase"; }},
      gate);
}

std::string to_string(const MultGate& gate) {
  std::ostringstream out;
  out.precision(17);
  out << gate_kind(gate);
  std::visit(
      overloaded{
          [&](const Ry& g) { out << ' ' << g.qubit << ' ' << g.angle.radians(); },
          [&](const Rz& g) { out << ' ' << g.qubit << ' ' << g.angle.radians(); },
          [&](const X& g) { out << ' ' << g.qubit; },
          [&](const CX& g) { out << ' ' << g.control << ' ' << g.target; },
          [&](const MCX& g) {
            out << ' ' << join_qubits(g.controls) << ' ' << g.target;
          },
          [&](const MCRy& g) {
            out << ' ' << join_qubits(g.controls) << ' ' << g.target << ' '
                << g.angle.radians();
          },
          [&](const CPhase& g) {
            out << ' ' << join_qubits(g.controls) << ' ' << g.angle.radians();
          }},
      gate);
  return out.str();
}

void validate_gate(const MultGate& gate, unsigned n_qubits) {
  std::visit(
      overloaded{
          [&](const Ry& g) { check_qubit(g.qubit, n_qubits); },
          [&](const Rz& g) { check_qubit(g.qubit, n_qubits); },
          [&](const X& g) { check_qubit(g.qubit, n_qubits); },
          [&](const CX& g) { check_controlled({g.control}, g.target, n_qubits); },
          [&](const MCX& g) { check_controlled(g.controls, g.target, n_qubits); },
          [&](const MCRy& g) { check_controlled(g.controls, g.target, n_qubits); },
          [&](const CPhase& g) {
            if (g.controls.empty()) {
              throw CircuitInvalidity("cphase needs at least one qubit");
            }
            check_controlled(g.controls, std::nullopt, n_qubits);
          }},
      gate);
}

MultCircuit::MultCircuit(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw CircuitInvalidity("qubit count must be positive");
  }
  if (n_qubits > kMaxQubits) {
    throw CircuitInvalidity(
        "at most " + std::to_string(kMaxQubits) + " qubits are supported");
  }
}

MultCircuit& MultCircuit::append(const MultGate& gate) {
  validate_gate(gate, n_qubits_);
  gates_.push_back(gate);
  return *this;
}

MultCircuit& MultCircuit::append(const std::vector<MultGate>& gates) {
  for (const auto& g : gates) append(g);
  return *this;
}

}  // namespace addcirc
