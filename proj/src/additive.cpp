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

#include "addcirc/additive.hpp"

#include <sstream>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

std::vector<std::size_t> touched_dims(const AdditiveGate& gate) {
  return std::visit(
      overloaded{
          [](const RyPlus& g) { return std::vector{g.first, g.second}; },
          [](const RzPlus& g) { return std::vector{g.dim}; },
          [](const XPlus& g) { return std::vector{g.first, g.second}; }},
      gate);
}

std::string to_string(const AdditiveGate& gate) {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      overloaded{
          [&](const RyPlus& g) {
            out << "ry " << g.first << " " << g.second << " "
                << g.angle.radians();
          },
          [&](const RzPlus& g) {
            out << "rz " << g.dim << " " << g.angle.radians();
          },
          [&](const XPlus& g) { out << "swap " << g.first << " " << g.second; }},
      gate);
  return out.str();
}

AdditiveCircuit::AdditiveCircuit(std::size_t dim) : dim_(dim) {
  if (dim == 0) {
    throw CircuitInvalidity("additive circuit dimension must be positive");
  }
}

void AdditiveCircuit::validate(const AdditiveGate& gate) const {
  for (std::size_t d : touched_dims(gate)) {
    if (d >= dim_) {
      throw CircuitInvalidity(
          "index " + std::to_string(d) + " out of range for dimension " +
          std::to_string(dim_));
    }
  }
  auto dims = touched_dims(gate);
  if (dims.size() == 2 && dims[0] == dims[1]) {
    throw CircuitInvalidity(
        "gate acts twice on dimension " + std::to_string(dims[0]));
  }
}

AdditiveCircuit& AdditiveCircuit::append(const AdditiveGate& gate) {
  validate(gate);
  gates_.push_back(gate);
  return *this;
}

AdditiveCircuit new_additive_circuit(std::size_t dim) {
  return AdditiveCircuit(dim);
}

AdditiveCircuit append(AdditiveCircuit circuit, const AdditiveGate& gate) {
  circuit.append(gate);
  return circuit;
}

AdditiveCircuit inverse(const AdditiveCircuit& circuit) {
  AdditiveCircuit result(circuit.dim());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    result.append(std::visit(
        overloaded{
            [](const RyPlus& g) -> AdditiveGate {
              return RyPlus{g.first, g.second, -g.angle};
            },
            [](const RzPlus& g) -> AdditiveGate {
              return RzPlus{g.dim, -g.angle};
            },
            [](const XPlus& g) -> AdditiveGate { return g; }},
        *it));
  }
  result.set_global_phase(-circuit.global_phase());
  return result;
}

}  // namespace addcirc
