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

#include "addcirc/translate.hpp"

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

namespace {

std::size_t mask_of(const std::vector<Qubit>& qubits) {
  std::size_t m = 0;
  for (Qubit q : qubits) m |= std::size_t{1} << q;
  return m;
}

// Index pairs (m, m + 2^t) with every control bit of m set.
template <class Fn>
void for_each_pair(unsigned n_qubits, std::size_t controls, Qubit target, Fn&& fn) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t m = 0; m < dim; ++m) {
    if ((m & tbit) == 0 && (m & controls) == controls) fn(m, m + tbit);
  }
}

}  // namespace

TranslatedGate translate_gate(const MultGate& gate, unsigned n_qubits) {
  validate_gate(gate, n_qubits);
  TranslatedGate out;
  auto rotations = [&](std::size_t controls, Qubit t, Angle angle) {
    for_each_pair(n_qubits, controls, t, [&](std::size_t a, std::size_t b) {
      out.gates.emplace_back(RyPlus{a, b, angle});
    });
  };
  auto swaps = [&](std::size_t controls, Qubit t) {
    for_each_pair(n_qubits, controls, t, [&](std::size_t a, std::size_t b) {
      out.gates.emplace_back(XPlus{a, b});
    });
  };
  auto phases = [&](std::size_t controls, Angle angle) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    for (std::size_t m = 0; m < dim; ++m) {
      if ((m & controls) == controls) out.gates.emplace_back(RzPlus{m, angle});
    }
  };
  std::visit(
      overloaded{
          [&](const Ry& g) { rotations(0, g.qubit, g.angle); },
          [&](const Rz& g) {
            // Rz(θ) = e^{-iθ/2} diag(1, e^{iθ})
            phases(std::size_t{1} << g.qubit, g.angle);
            out.phase = -g.angle / 2;
          },
          [&](const X& g) { swaps(0, g.qubit); },
          [&](const CX& g) { swaps(std::size_t{1} << g.control, g.target); },
          [&](const MCX& g) { swaps(mask_of(g.controls), g.target); },
          [&](const MCRy& g) { rotations(mask_of(g.controls), g.target, g.angle); },
          [&](const CPhase& g) { phases(mask_of(g.controls), g.angle); }},
      gate);
  return out;
}

AdditiveCircuit translate_circuit(const MultCircuit& circuit) {
  AdditiveCircuit out(circuit.dim());
  out.set_global_phase(circuit.global_phase());
  for (const auto& gate : circuit.gates()) {
    TranslatedGate t = translate_gate(gate, circuit.n_qubits());
    for (const auto& g : t.gates) out.append(g);
    out.add_global_phase(t.phase);
  }
  return out;
}

}  // namespace addcirc
