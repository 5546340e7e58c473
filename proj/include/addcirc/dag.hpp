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

#include <array>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcirc/additive.hpp"
#include "addcirc/permutation.hpp"
#include "addcirc/rewrite.hpp"

namespace addcirc {

class DagError : public std::runtime_error {
 public:
  explicit DagError(const std::string& message) : std::runtime_error(message) {}
};

using VertexId = std::size_t;
using EdgeId = std::size_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class NodeKind { Input, Output, Rotation };

/// Input/Output nodes are indexed by dimension, rotations by VertexId.
struct NodeRef {
  NodeKind kind;
  std::size_t index;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Port {
  NodeRef node;
  unsigned slot = 0;
  friend bool operator==(const Port&, const Port&) = default;
};

struct PhasedEdge {
  Port from;
  Port to;
  Angle phase;
};

/**
 * An RyPlus vertex. Slot s carries dimension dims[s]; the stored angle is
 * the rotation with dims[0] as the leading row, and dims[0] < dims[1] for
 * DAGs built by to_dag.
 */
struct RyVertex {
  Angle angle;
  std::array<std::size_t, 2> dims;
  std::array<EdgeId, 2> in{kNoEdge, kNoEdge};
  std::array<EdgeId, 2> out{kNoEdge, kNoEdge};
};

/**
 * Graph form of a swap-free additive circuit: RyPlus vertices joined by
 * edges labelled with the accumulated RzPlus phase on that stretch of wire.
 * Each dimension has one input and one output boundary node. The swap
 * residue of canonicalization is kept as a trailing permutation applied
 * after the outputs.
 */
class AdditiveDag {
 public:
  explicit AdditiveDag(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<RyVertex>& vertices() const { return vertices_; }
  const RyVertex& vertex(VertexId v) const;
  const std::vector<PhasedEdge>& edges() const { return edges_; }
  const PhasedEdge& edge(EdgeId e) const { return edges_.at(e); }
  EdgeId input_edge(std::size_t dim) const { return input_edges_.at(dim); }
  EdgeId output_edge(std::size_t dim) const { return output_edges_.at(dim); }

  const Permutation& trailing() const { return trailing_; }
  void set_trailing(Permutation perm);
  Angle global_phase() const { return global_phase_; }
  void set_global_phase(Angle phase) { global_phase_ = phase; }

  // Low-level construction. validate() checks the result.
  VertexId add_vertex(Angle angle, std::size_t first_dim, std::size_t second_dim);
  /// @throws DagError if either port is already connected.
  EdgeId connect(Port from, Port to, Angle phase);

  std::vector<VertexId> predecessors(VertexId v) const;
  std::vector<VertexId> successors(VertexId v) const;

  /// Vertices in topological order, smallest id first among ready ones.
  /// @throws DagError on a cycle.
  std::vector<VertexId> topological_order() const;

  /**
   * @throws DagError unless every port is connected exactly once, edges
   * stay on one dimension, and the graph is acyclic.
   */
  void validate() const;

  /// Number of dimensions carrying a nonzero phase on their output edge.
  std::size_t output_phase_count() const;

 private:
  EdgeId& port_edge(const Port& port, bool outgoing);

  std::size_t dim_;
  std::vector<RyVertex> vertices_;
  std::vector<PhasedEdge> edges_;
  std::vector<EdgeId> input_edges_;
  std::vector<EdgeId> output_edges_;
  Permutation trailing_;
  Angle global_phase_;
};

/**
 * Builds the DAG of a swap-free circuit. Consecutive phases on a wire are
 * summed onto one edge, back-to-back rotations on the same pair merge, and
 * a merged rotation that cancels is removed with its phases carried over.
 *
 * @throws DagError if the circuit contains XPlus.
 */
AdditiveDag to_dag(
    const AdditiveCircuit& circuit, const Permutation& trailing = Permutation{});
AdditiveDag to_dag(const SwapFreeCircuit& canonical);

/// Topological emission: edge phases, then each rotation, then output
/// phases, then the trailing permutation as XPlus gates.
AdditiveCircuit from_dag(const AdditiveDag& dag);

/// True iff a directed path joins the vertices in either direction.
/// @throws DagError for an unknown vertex.
bool causally_related(const AdditiveDag& dag, VertexId a, VertexId b);

/// reach[a][b] iff a directed path runs from a to b (a != b).
std::vector<std::vector<bool>> transitive_closure(const AdditiveDag& dag);

/// Graphviz rendering, one node or edge per line.
std::string to_dot(const AdditiveDag& dag);

}  // namespace addcirc
