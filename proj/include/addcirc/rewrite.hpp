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

#include "addcirc/additive.hpp"
#include "addcirc/permutation.hpp"

namespace addcirc {

/// A swap-free circuit W and permutation σ with U = S_σ · W.
struct SwapFreeCircuit {
  AdditiveCircuit circuit;
  Permutation trailing;
};

/**
 * Commutes every XPlus to the end of the circuit, relabelling the gates it
 * passes. The result contains no XPlus.
 */
SwapFreeCircuit push_swaps_right(const AdditiveCircuit& circuit);

/// RyPlus(i, j, θ) with i > j becomes RyPlus(j, i, -θ).
RyPlus normalize_ry_orientation(const RyPlus& gate);

/**
 * Merges rotations on the same wires whenever only commuting gates sit
 * between them, and drops gates whose angle reduces to zero. Runs to a
 * fixpoint. Orientation of RyPlus gates is normalized first.
 *
 * @throws CircuitInvalidity if the circuit contains XPlus.
 */
AdditiveCircuit merge_adjacent(const AdditiveCircuit& circuit);

/**
 * Full normal form: swap pushing, orientation, merging, then a stable order
 * of commuting gates by (smallest touched dimension, Rz before Ry, angle).
 * Idempotent on its own output.
 */
SwapFreeCircuit canonicalize(const AdditiveCircuit& circuit);

/// True when the two gates act on disjoint dimensions or are both phases.
bool gates_commute(const AdditiveGate& a, const AdditiveGate& b);

}  // namespace addcirc
