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

#include <vector>

#include "addcirc/additive.hpp"
#include "addcirc/multiplicative.hpp"

namespace addcirc {

struct TranslatedGate {
  std::vector<AdditiveGate> gates;
  Angle phase;
};

/**
 * Expands one qubit gate into additive primitives over 2^n dimensions.
 *
 * Each conditional action on a target bit becomes one primitive per index
 * pair (m, m + 2^t) whose control bits are set; Rz picks up the phase -θ/2.
 */
TranslatedGate translate_gate(const MultGate& gate, unsigned n_qubits);

/// Exact translation, global phase included.
AdditiveCircuit translate_circuit(const MultCircuit& circuit);

}  // namespace addcirc
