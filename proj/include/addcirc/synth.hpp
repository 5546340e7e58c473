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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "addcirc/dag.hpp"
#include "addcirc/multiplicative.hpp"
#include "addcirc/permutation.hpp"

namespace addcirc {

class SynthesisError : public std::runtime_error {
 public:
  explicit SynthesisError(const std::string& message)
      : std::runtime_error(message) {}
};

/// One fused rotation: RyPlus(first, second, angle) from DAG vertex `vertex`.
struct StackMember {
  VertexId vertex;
  std::size_t first;
  std::size_t second;
  friend bool operator==(const StackMember&, const StackMember&) = default;
};

/// Causally unrelated, dimension-disjoint rotations sharing one angle.
struct StackedVertex {
  Angle angle;
  std::vector<StackMember> members;

  std::size_t length() const { return members.size(); }
};

/// Bijection between dimensions and n-bit basis bitstrings.
class PlacementMap {
 public:
  explicit PlacementMap(unsigned n_qubits);  // dimension i <-> bitstring i
  static PlacementMap from_bitstrings(unsigned n_qubits, std::vector<std::size_t> bits_of_dim);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return bits_of_.size(); }
  std::size_t bits_of(std::size_t dim) const { return bits_of_.at(dim); }
  std::size_t dim_at(std::size_t bits) const { return dim_at_.at(bits); }
  const std::vector<std::size_t>& bitstrings() const { return bits_of_; }

  /// The dimensions placed on bitstrings a and b trade places.
  void swap_bitstrings(std::size_t a, std::size_t b);

  friend bool operator==(const PlacementMap&, const PlacementMap&) = default;

 private:
  unsigned n_qubits_;
  std::vector<std::size_t> bits_of_;
  std::vector<std::size_t> dim_at_;
};

/**
 * Hypercube locality of a stack under a placement. Each flag is computed on
 * its own:
 *  - edge: every member's two bitstrings differ in exactly one bit;
 *  - parallel: every member differs in the same single bit;
 *  - dense: all placed bitstrings vary in at most k+1 bit positions for a
 *    stack of length 2^k;
 *  - aligned: every member's `first` dimension sits on the same side of the
 *    differing bit, so one Ry angle serves the whole stack.
 * The witness lists the bitstring pairs of members breaking the first failed
 * flag, in the order above.
 */
struct ConstraintReport {
  bool edge_ok = false;
  bool parallel_ok = false;
  bool dense_ok = false;
  bool aligned_ok = false;
  std::vector<std::pair<std::size_t, std::size_t>> witness;

  bool satisfied() const { return edge_ok && parallel_ok && dense_ok && aligned_ok; }
};

/// Routing state for one stack: the bitstring permutation applied right
/// before it (identity when none was needed) and the placement after it.
struct RoutedSegment {
  StackedVertex stack;
  Permutation move;
  PlacementMap placement;
};

struct RoutingSchedule {
  std::vector<RoutedSegment> segments;
  PlacementMap final_placement;
  std::size_t permutation_count = 0;
};

struct SynthesisReport {
  MultCircuit output;
  std::map<std::string, std::size_t> counts;  // gate kind -> occurrences
  std::size_t routing_permutations = 0;       // excludes the final restore
  std::size_t stacks = 0;                     // after power-of-two splitting
};

/**
 * Greedy fusion in topological order: each vertex joins the earliest stack
 * with an equivalent angle (mod 4π) whose members it is causally unrelated
 * and dimension-disjoint to, provided the stack-level ordering stays
 * acyclic; otherwise it opens a new stack. Returned in an order that
 * respects causality.
 */
std::vector<StackedVertex> stack_vertices(const AdditiveDag& dag);

/// Binary decomposition of the length, largest part first, members in order.
std::vector<StackedVertex> split_power_of_two(const StackedVertex& stack);

/// @throws std::invalid_argument unless the stack length is a power of two.
ConstraintReport check_constraints(const StackedVertex& stack, const PlacementMap& placement);

/**
 * X conjugations on fixed bits that are 0, one Ry controlled on every fixed
 * bit, then the conjugations again. A stack covering all 2^n bitstrings
 * comes out as a bare Ry.
 *
 * @throws SynthesisError when the constraints are not satisfied.
 */
std::vector<MultGate> synth_stacked_vertex(
    const StackedVertex& stack, const PlacementMap& placement, unsigned n_qubits);

/**
 * Walks the stacks in order and, whenever one breaks its constraints,
 * relocates its dimensions onto the cheapest subcube by swapping each
 * misplaced dimension with the current occupant of its target bitstring.
 */
RoutingSchedule route(const std::vector<StackedVertex>& stacks, const PlacementMap& initial);

/**
 * Reversible circuit of MCX and X gates implementing the bitstring
 * permutation exactly. Each transposition runs along a Gray-code path.
 */
std::vector<MultGate> synth_permutation(const Permutation& perm, unsigned n_qubits);

/**
 * Diagonal unitary diag(e^{iφ_b}) as single-qubit Rz and multi-qubit CPhase
 * gates; the returned global phase makes the result exact.
 *
 * @throws SynthesisError unless phases.size() == 2^n.
 */
MultCircuit synth_phases(const std::vector<Angle>& phases, unsigned n_qubits);

/// Full pipeline. @throws SynthesisError for a non power-of-two dimension.
SynthesisReport synthesize(const AdditiveDag& dag);

}  // namespace addcirc
