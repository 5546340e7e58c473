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

#include <functional>
#include <random>

#include "addcirc/dag.hpp"
#include "addcirc/semantics.hpp"
#include "catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace addcirc;

namespace {

const Angle kT(0.37);

UnitaryMatrix dag_matrix(const AdditiveDag& dag) { return eval_additive(from_dag(dag)); }

// Reachability by walking successor lists.
bool reaches(const AdditiveDag& dag, VertexId from, VertexId to) {
  std::vector<bool> seen(dag.vertices().size(), false);
  std::function<bool(VertexId)> visit = [&](VertexId v) {
    for (VertexId s : dag.successors(v)) {
      if (s == to) return true;
      if (!seen[s]) {
        seen[s] = true;
        if (visit(s)) return true;
      }
    }
    return false;
  };
  return visit(from);
}

}  // namespace

TEST_CASE("single rotation DAG", "[dag]") {
  AdditiveCircuit c(2);
  c.append(RyPlus{0, 1, kT});
  const auto dag = to_dag(c);
  REQUIRE(dag.vertices().size() == 1);
  CHECK(dag.edges().size() == 4);
  for (const auto& e : dag.edges()) CHECK(e.phase.radians() == 0.0);
  CHECK_NOTHROW(dag.validate());
  CHECK(from_dag(dag).gates() == c.gates());
}

TEST_CASE("consecutive phases merge onto one edge", "[dag]") {
  AdditiveCircuit c(2);
  c.append(RzPlus{0, Angle(0.2)}).append(RzPlus{0, Angle(0.5)}).append(RyPlus{0, 1, kT});
  const auto dag = to_dag(c);
  REQUIRE(dag.vertices().size() == 1);
  const auto& e = dag.edge(dag.vertex(0).in[0]);
  CHECK(std::abs(e.phase.radians() - 0.7) < 1e-15);
  CHECK(e.from.node.kind == NodeKind::Input);
}

TEST_CASE("neighbouring rotations on one pair merge or vanish", "[dag]") {
  AdditiveCircuit c(4);
  c.append(RyPlus{0, 1, kT}).append(RyPlus{0, 1, Angle(0.4)});
  const auto dag = to_dag(c);
  REQUIRE(dag.vertices().size() == 1);
  CHECK(std::abs(dag.vertex(0).angle.radians() - 0.77) < 1e-15);

  AdditiveCircuit cancel(4);
  cancel.append(RzPlus{0, Angle(0.3)}).append(RyPlus{0, 1, kT}).append(RyPlus{0, 1, -kT});
  cancel.append(RzPlus{0, Angle(0.2)});
  const auto gone = to_dag(cancel);
  CHECK(gone.vertices().empty());
  CHECK(std::abs(gone.edge(gone.output_edge(0)).phase.radians() - 0.5) < 1e-15);
  CHECK(dag_matrix(gone).max_abs_diff(eval_additive(cancel)) < 1e-12);
}

TEST_CASE("swaps must be canonicalized first", "[dag]") {
  AdditiveCircuit c(2);
  c.append(XPlus{0, 1});
  CHECK_THROWS_AS(to_dag(c), DagError);
}

TEST_CASE("output phases come before the trailing permutation", "[dag]") {
  AdditiveCircuit c(3);
  c.append(RyPlus{0, 1, kT}).append(RzPlus{1, Angle(0.9)});
  const auto dag = to_dag(c, Permutation::from_image({1, 2, 0}));
  const auto back = from_dag(dag);
  REQUIRE(back.size() == 4);
  CHECK(std::holds_alternative<RzPlus>(back.gates()[1]));
  const auto want = permutation_matrix(dag.trailing()) * eval_additive(c);
  CHECK(dag_matrix(dag).max_abs_diff(want) < 1e-12);
  // Emitting the swaps first would relabel the phase; the two orders differ.
  AdditiveCircuit swapped_first(3);
  swapped_first.append(RyPlus{0, 1, kT});
  for (const auto& [a, b] : dag.trailing().transpositions()) swapped_first.append(XPlus{a, b});
  swapped_first.append(RzPlus{1, Angle(0.9)});
  CHECK(eval_additive(swapped_first).max_abs_diff(want) > 1e-3);
}

TEST_CASE("causal relations", "[dag]") {
  AdditiveCircuit chain(3);
  chain.append(RyPlus{0, 1, kT}).append(RyPlus{1, 2, kT});
  const auto a = to_dag(chain);
  CHECK(causally_related(a, 0, 1));
  CHECK(causally_related(a, 1, 0));

  AdditiveCircuit disjoint(4);
  disjoint.append(RyPlus{0, 1, kT}).append(RyPlus{2, 3, kT});
  CHECK_FALSE(causally_related(to_dag(disjoint), 0, 1));

  // Diamond: top feeds two rotations that both feed the bottom one.
  AdditiveCircuit diamond(4);
  diamond.append(RyPlus{1, 2, kT}).append(RyPlus{0, 1, kT}).append(RyPlus{2, 3, kT});
  diamond.append(RyPlus{0, 3, kT});
  const auto d = to_dag(diamond);
  CHECK(causally_related(d, 0, 3));
  CHECK(reaches(d, 0, 3));
  CHECK_FALSE(causally_related(d, 1, 2));
  CHECK_THROWS_AS(causally_related(d, 0, 99), DagError);
}

TEST_CASE("structural validation catches broken graphs", "[dag]") {
  AdditiveDag dag(2);
  dag.add_vertex(kT, 0, 1);
  CHECK_THROWS_AS(dag.validate(), DagError);
  dag.connect({{NodeKind::Input, 0}, 0}, {{NodeKind::Rotation, 0}, 0}, Angle());
  CHECK_THROWS_AS(dag.connect({{NodeKind::Input, 0}, 0}, {{NodeKind::Rotation, 0}, 1}, Angle()), DagError);
}

TEST_CASE("DAG round trips on random canonical circuits", "[dag][property]") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + testing::pick(rng, 15);
    const auto c = testing::random_additive_circuit(rng, dim, testing::pick(rng, 30));
    const auto canon = canonicalize(c);
    const auto dag = to_dag(canon);
    CHECK_NOTHROW(dag.validate());
    std::size_t ry = 0;
    for (const auto& g : canon.circuit.gates()) ry += std::holds_alternative<RyPlus>(g);
    CHECK(dag.vertices().size() <= ry);
    for (const auto& v : dag.vertices()) CHECK_FALSE(v.angle.is_zero(kRotationPeriod));
    const auto want = permutation_matrix(canon.trailing) * eval_additive(canon.circuit);
    CHECK(dag_matrix(dag).max_abs_diff(want) < 1e-10);

    const auto reach = transitive_closure(dag);
    for (VertexId a = 0; a < dag.vertices().size(); ++a) {
      for (VertexId b = 0; b < dag.vertices().size(); ++b) {
        if (a == b) continue;
        CHECK(reach[a][b] == reaches(dag, a, b));
        CHECK(causally_related(dag, a, b) == (reaches(dag, a, b) || reaches(dag, b, a)));
      }
    }
  }
}

TEST_CASE("edge phases sum to the net phase of each wire", "[dag][property]") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + testing::pick(rng, 6);
    const auto canon = canonicalize(testing::random_additive_circuit(rng, dim, 20, false));
    std::vector<double> net(dim, 0.0);
    for (const auto& g : canon.circuit.gates()) {
      if (const auto* z = std::get_if<RzPlus>(&g)) net[z->dim] += z->angle.radians();
    }
    const auto dag = to_dag(canon);
    std::vector<double> summed(dim, 0.0);
    for (const auto& e : dag.edges()) {
      const std::size_t d = e.from.node.kind == NodeKind::Input
                                ? e.from.node.index
                                : dag.vertex(e.from.node.index).dims[e.from.slot];
      summed[d] += e.phase.radians();
    }
    for (std::size_t d = 0; d < dim; ++d) {
      CHECK(Angle(summed[d] - net[d]).is_zero(kPhasePeriod, 1e-10));
    }
  }
}

TEST_CASE("Graphviz output has one line per item", "[dag]") {
  AdditiveCircuit c(2);
  c.append(RyPlus{0, 1, kT}).append(RzPlus{0, kT});
  const auto dag = to_dag(c);
  const std::string dot = to_dot(dag);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++arrows;
  CHECK(arrows == dag.edges().size());
}
