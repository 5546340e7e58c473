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

#include "addcirc/dag.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

namespace {

std::string node_name(const NodeRef& node) {
  switch (node.kind) {
    case NodeKind::Input:
      return "in" + std::to_string(node.index);
    case NodeKind::Output:
      return "out" + std::to_string(node.index);
    case NodeKind::Rotation:
      return "v" + std::to_string(node.index);
  }
  return "?";
}

}  // namespace

AdditiveDag::AdditiveDag(std::size_t dim)
    : dim_(dim),
      input_edges_(dim, kNoEdge),
      output_edges_(dim, kNoEdge),
      trailing_(dim) {
  if (dim == 0) throw DagError("DAG dimension must be positive");
}

const RyVertex& AdditiveDag::vertex(VertexId v) const {
  if (v >= vertices_.size()) {
    throw DagError("unknown vertex " + std::to_string(v));
  }
  return vertices_[v];
}

void AdditiveDag::set_trailing(Permutation perm) {
  if (perm.size() != dim_) throw DagError("trailing permutation size mismatch");
  trailing_ = std::move(perm);
}

VertexId AdditiveDag::add_vertex(
    Angle angle, std::size_t first_dim, std::size_t second_dim) {
  if (first_dim >= dim_ || second_dim >= dim_ || first_dim == second_dim) {
    throw DagError("invalid vertex dimensions");
  }
  vertices_.push_back(RyVertex{angle, {first_dim, second_dim}});
  return vertices_.size() - 1;
}

EdgeId& AdditiveDag::port_edge(const Port& port, bool outgoing) {
  switch (port.node.kind) {
    case NodeKind::Input:
      if (!outgoing || port.slot != 0 || port.node.index >= dim_) break;
      return input_edges_[port.node.index];
    case NodeKind::Output:
      if (outgoing || port.slot != 0 || port.node.index >= dim_) break;
      return output_edges_[port.node.index];
    case NodeKind::Rotation:
      if (port.slot > 1 || port.node.index >= vertices_.size()) break;
      return outgoing ? vertices_[port.node.index].out[port.slot]
                      : vertices_[port.node.index].in[port.slot];
  }
  throw DagError("invalid port on " + node_name(port.node));
}

EdgeId AdditiveDag::connect(Port from, Port to, Angle phase) {
  EdgeId& out_slot = port_edge(from, true);
  EdgeId& in_slot = port_edge(to, false);
  if (out_slot != kNoEdge || in_slot != kNoEdge) {
    throw DagError(
        "port already connected: " + node_name(from.node) + " -> " +
        node_name(to.node));
  }
  const EdgeId id = edges_.size();
  edges_.push_back(PhasedEdge{from, to, phase});
  out_slot = id;
  in_slot = id;
  return id;
}

std::vector<VertexId> AdditiveDag::predecessors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : vertex(v).in) {
    if (e != kNoEdge && edges_[e].from.node.kind == NodeKind::Rotation) {
      out.push_back(edges_[e].from.node.index);
    }
  }
  return out;
}

std::vector<VertexId> AdditiveDag::successors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : vertex(v).out) {
    if (e != kNoEdge && edges_[e].to.node.kind == NodeKind::Rotation) {
      out.push_back(edges_[e].to.node.index);
    }
  }
  return out;
}

std::vector<VertexId> AdditiveDag::topological_order() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indegree(n, 0);
  for (VertexId v = 0; v < n; ++v) indegree[v] = predecessors(v).size();
  std::set<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (VertexId s : successors(v)) {
      if (--indegree[s] == 0) ready.insert(s);
    }
  }
  if (order.size() != n) throw DagError("additive DAG contains a cycle");
  return order;
}

void AdditiveDag::validate() const {
  auto port_dim = [&](const Port& p) {
    return p.node.kind == NodeKind::Rotation ? vertices_[p.node.index].dims[p.slot]
                                             : p.node.index;
  };
  for (std::size_t d = 0; d < dim_; ++d) {
    if (input_edges_[d] == kNoEdge || output_edges_[d] == kNoEdge) {
      throw DagError("boundary of dimension " + std::to_string(d) + " is unconnected");
    }
  }
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    for (unsigned s = 0; s < 2; ++s) {
      if (vertices_[v].in[s] == kNoEdge || vertices_[v].out[s] == kNoEdge) {
        throw DagError("vertex " + std::to_string(v) + " has an unconnected slot");
      }
    }
  }
  for (const auto& e : edges_) {
    if (port_dim(e.from) != port_dim(e.to)) {
      throw DagError(
          "edge " + node_name(e.from.node) + " -> " + node_name(e.to.node) +
          " changes dimension");
    }
  }
  (void)topological_order();
}

std::size_t AdditiveDag::output_phase_count() const {
  std::size_t count = 0;
  for (EdgeId e : output_edges_) {
    if (e != kNoEdge && !edges_[e].phase.is_zero(kPhasePeriod)) ++count;
  }
  return count;
}

AdditiveDag to_dag(const AdditiveCircuit& circuit, const Permutation& trailing) {
  const std::size_t dim = circuit.dim();
  struct Draft {
    Angle angle;
    std::array<std::size_t, 2> dims;
    std::array<Port, 2> source;
    std::array<Angle, 2> phase;
    bool alive = true;
  };
  std::vector<Draft> drafts;
  std::vector<Port> open(dim);
  std::vector<Angle> pending(dim);
  for (std::size_t d = 0; d < dim; ++d) open[d] = Port{{NodeKind::Input, d}, 0};

  for (const auto& gate : circuit.gates()) {
    if (std::holds_alternative<XPlus>(gate)) {
      throw DagError("circuit contains swaps; canonicalize it before building a DAG");
    }
    if (const auto* rz = std::get_if<RzPlus>(&gate)) {
      pending[rz->dim] += rz->angle;
      continue;
    }
    const RyPlus g = normalize_ry_orientation(std::get<RyPlus>(gate));
    const std::size_t i = g.first;
    const std::size_t j = g.second;
    const Port& oi = open[i];
    const Port& oj = open[j];
    if (oi.node.kind == NodeKind::Rotation && oi.node == oj.node &&
        pending[i].is_zero(kPhasePeriod) && pending[j].is_zero(kPhasePeriod)) {
      Draft& v = drafts[oi.node.index];
      v.angle += g.angle;
      if (v.angle.is_zero(kRotationPeriod)) {
        v.alive = false;
        open[i] = v.source[0];
        open[j] = v.source[1];
        pending[i] = v.phase[0] + pending[i];
        pending[j] = v.phase[1] + pending[j];
      }
      continue;
    }
    const std::size_t id = drafts.size();
    drafts.push_back(Draft{g.angle, {i, j}, {open[i], open[j]}, {pending[i], pending[j]}});
    open[i] = Port{{NodeKind::Rotation, id}, 0};
    open[j] = Port{{NodeKind::Rotation, id}, 1};
    pending[i] = Angle{};
    pending[j] = Angle{};
  }

  AdditiveDag dag(dim);
  dag.set_global_phase(circuit.global_phase());
  dag.set_trailing(trailing.size() == 0 ? Permutation(dim) : trailing);
  std::vector<VertexId> renumber(drafts.size(), kNoEdge);
  for (std::size_t k = 0; k < drafts.size(); ++k) {
    if (drafts[k].alive) {
      renumber[k] = dag.add_vertex(drafts[k].angle, drafts[k].dims[0], drafts[k].dims[1]);
    }
  }
  auto remap = [&](Port p) {
    if (p.node.kind == NodeKind::Rotation) p.node.index = renumber[p.node.index];
    return p;
  };
  for (std::size_t k = 0; k < drafts.size(); ++k) {
    if (!drafts[k].alive) continue;
    for (unsigned s = 0; s < 2; ++s) {
      dag.connect(
          remap(drafts[k].source[s]), Port{{NodeKind::Rotation, renumber[k]}, s},
          drafts[k].phase[s]);
    }
  }
  for (std::size_t d = 0; d < dim; ++d) {
    dag.connect(remap(open[d]), Port{{NodeKind::Output, d}, 0}, pending[d]);
  }
  dag.validate();
  return dag;
}

AdditiveDag to_dag(const SwapFreeCircuit& canonical) {
  return to_dag(canonical.circuit, canonical.trailing);
}

AdditiveCircuit from_dag(const AdditiveDag& dag) {
  dag.validate();
  AdditiveCircuit out(dag.dim());
  out.set_global_phase(dag.global_phase());
  for (VertexId v : dag.topological_order()) {
    const RyVertex& vx = dag.vertex(v);
    for (unsigned s = 0; s < 2; ++s) {
      const Angle phase = dag.edge(vx.in[s]).phase;
      if (!phase.is_zero(kPhasePeriod)) out.append(RzPlus{vx.dims[s], phase});
    }
    out.append(RyPlus{vx.dims[0], vx.dims[1], vx.angle});
  }
  for (std::size_t d = 0; d < dag.dim(); ++d) {
    const Angle phase = dag.edge(dag.output_edge(d)).phase;
    if (!phase.is_zero(kPhasePeriod)) out.append(RzPlus{d, phase});
  }
  for (const auto& [a, b] : dag.trailing().transpositions()) out.append(XPlus{a, b});
  return out;
}

namespace {

bool reaches(const AdditiveDag& dag, VertexId from, VertexId to) {
  std::vector<bool> seen(dag.vertices().size(), false);
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId s : dag.successors(v)) {
      if (s == to) return true;
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  return false;
}

}  // namespace

bool causally_related(const AdditiveDag& dag, VertexId a, VertexId b) {
  (void)dag.vertex(a);
  (void)dag.vertex(b);
  return reaches(dag, a, b) || reaches(dag, b, a);
}

std::vector<std::vector<bool>> transitive_closure(const AdditiveDag& dag) {
  const std::size_t n = dag.vertices().size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  const auto order = dag.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (VertexId s : dag.successors(*it)) {
      reach[*it][s] = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (reach[s][k]) reach[*it][k] = true;
      }
    }
  }
  return reach;
}

std::string to_dot(const AdditiveDag& dag) {
  std::ostringstream out;
  out.precision(17);
  out << "digraph additive_dag {\n";
  for (std::size_t d = 0; d < dag.dim(); ++d) {
    out << "  in" << d << " [shape=circle, label=\"in " << d << "\"];\n";
    out << "  out" << d << " [shape=circle, label=\"out " << d << "\"];\n";
  }
  for (VertexId v = 0; v < dag.vertices().size(); ++v) {
    const auto& vx = dag.vertex(v);
    out << "  v" << v << " [shape=box, label=\"Ry " << vx.angle.radians() << " ("
        << vx.dims[0] << "," << vx.dims[1] << ")\"];\n";
  }
  for (const auto& e : dag.edges()) {
    out << "  " << node_name(e.from.node) << " -> " << node_name(e.to.node)
        << " [taillabel=\"" << e.from.slot << "\", headlabel=\"" << e.to.slot
        << "\", label=\"" << e.phase.radians() << "\"];\n";
  }
  if (!dag.trailing().is_identity()) {
    out << "  // trailing permutation:";
    for (std::size_t v : dag.trailing().image()) out << ' ' << v;
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace addcirc
