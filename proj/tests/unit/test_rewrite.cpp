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

#include <random>

#include "addcirc/rewrite.hpp"
#include "addcirc/semantics.hpp"
#include "addcirc/translate.hpp"
#include "catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace addcirc;

namespace {

const Angle kT(0.83);
const Angle kP(-0.41);

UnitaryMatrix with_trailing(const SwapFreeCircuit& s) {
  if (s.trailing.size() == 0) return eval_additive(s.circuit);
  return permutation_matrix(s.trailing) * eval_additive(s.circuit);
}

MultCircuit cry_decomposition(double theta, bool alternative) {
  MultCircuit c(2);
  if (alternative) {
    c.append(CX{1, 0}).append(Ry{0, Angle(-theta / 2)}).append(CX{1, 0}).append(Ry{0, Angle(theta / 2)});
  } else {
    c.append(Ry{0, Angle(theta / 2)}).append(CX{1, 0}).append(Ry{0, Angle(-theta / 2)}).append(CX{1, 0});
  }
  return c;
}

}  // namespace

TEST_CASE("push_swaps_right examples", "[rewrite]") {
  AdditiveCircuit a(2);
  a.append(XPlus{0, 1}).append(RzPlus{0, kT});
  const auto ra = push_swaps_right(a);
  CHECK(ra.circuit.gates() == std::vector<AdditiveGate>{RzPlus{1, kT}});
  CHECK(ra.trailing == Permutation::transposition(2, 0, 1));

  AdditiveCircuit b(2);
  b.append(RyPlus{0, 1, kT});
  const auto rb = push_swaps_right(b);
  CHECK(rb.circuit.gates() == b.gates());
  CHECK(rb.trailing.is_identity());

  AdditiveCircuit c(2);
  c.append(XPlus{0, 1}).append(XPlus{0, 1});
  const auto rc = push_swaps_right(c);
  CHECK(rc.circuit.empty());
  CHECK(rc.trailing.is_identity());
}

TEST_CASE("normalize_ry_orientation examples", "[rewrite]") {
  CHECK(normalize_ry_orientation(RyPlus{3, 1, kT}) == RyPlus{1, 3, -kT});
  CHECK(normalize_ry_orientation(RyPlus{0, 2, kT}) == RyPlus{0, 2, kT});
  const auto z = normalize_ry_orientation(RyPlus{1, 0, Angle(0)});
  CHECK(z.first == 0);
  CHECK(z.second == 1);
  CHECK(z.angle.is_zero(kRotationPeriod));
  CHECK(gate_matrix_additive(RyPlus{3, 1, kT}, 4).max_abs_diff(
            gate_matrix_additive(normalize_ry_orientation(RyPlus{3, 1, kT}), 4)) < 1e-15);
}

TEST_CASE("merge_adjacent examples", "[rewrite]") {
  AdditiveCircuit a(3);
  a.append(RyPlus{0, 1, kT}).append(RyPlus{0, 1, kP});
  CHECK(merge_adjacent(a).gates() == std::vector<AdditiveGate>{RyPlus{0, 1, kT + kP}});

  AdditiveCircuit b(2);
  b.append(RyPlus{0, 1, kT}).append(RyPlus{0, 1, -kT});
  CHECK(merge_adjacent(b).empty());

  AdditiveCircuit c(3);
  c.append(RyPlus{0, 1, kT}).append(RzPlus{2, kP}).append(RyPlus{0, 1, kT});
  CHECK(merge_adjacent(c).gates() == std::vector<AdditiveGate>{RzPlus{2, kP}, RyPlus{0, 1, kT + kT}});

  AdditiveCircuit blocked(2);
  blocked.append(RyPlus{0, 1, kT}).append(RzPlus{1, kP}).append(RyPlus{0, 1, kT});
  CHECK(merge_adjacent(blocked).size() == 3);

  AdditiveCircuit phases(2);
  phases.append(RzPlus{1, kT}).append(RzPlus{1, -kT}).append(RzPlus{0, Angle(2 * kPi)});
  CHECK(merge_adjacent(phases).empty());

  AdditiveCircuit swaps(2);
  swaps.append(XPlus{0, 1});
  CHECK_THROWS_AS(merge_adjacent(swaps), CircuitInvalidity);
}

TEST_CASE("a full turn of a half-angle rotation is not removed", "[rewrite]") {
  AdditiveCircuit c(2);
  c.append(RyPlus{0, 1, Angle(2 * kPi)});
  const auto m = merge_adjacent(c);
  REQUIRE(m.size() == 1);
  CHECK(eval_additive(m).max_abs_diff(eval_additive(c)) < 1e-15);
}

TEST_CASE("commutation predicate", "[rewrite]") {
  CHECK(gates_commute(RzPlus{0, kT}, RzPlus{0, kP}));
  CHECK(gates_commute(RyPlus{0, 1, kT}, RzPlus{2, kP}));
  CHECK_FALSE(gates_commute(RyPlus{0, 1, kT}, RzPlus{1, kP}));
  CHECK_FALSE(gates_commute(RyPlus{0, 1, kT}, RyPlus{1, 2, kP}));
  CHECK(gates_commute(RyPlus{0, 1, kT}, RyPlus{2, 3, kP}));
}

TEST_CASE("canonical form of the controlled rotation", "[rewrite]") {
  const double theta = 1.1;
  const auto a = canonicalize(translate_circuit(cry_decomposition(theta, false)));
  const auto b = canonicalize(translate_circuit(cry_decomposition(theta, true)));
  REQUIRE(a.circuit.size() == 1);
  const auto& g = std::get<RyPlus>(a.circuit.gates()[0]);
  CHECK(g.first == 2);
  CHECK(g.second == 3);
  CHECK(std::abs(g.angle.radians() - theta) < 1e-12);
  CHECK(a.trailing.is_identity());
  CHECK(a.circuit.gates() == b.circuit.gates());
  CHECK(a.trailing == b.trailing);

  const auto again = canonicalize(a.circuit);
  CHECK(again.circuit.gates() == a.circuit.gates());
}

TEST_CASE("phase gadgets simplify to pure phases", "[rewrite]") {
  MultCircuit gadget(3);
  gadget.append(CX{0, 1}).append(CX{1, 2}).append(Rz{2, kT}).append(CX{1, 2}).append(CX{0, 1});
  const auto s = canonicalize(translate_circuit(gadget));
  CHECK(s.trailing.is_identity());
  for (const auto& g : s.circuit.gates()) CHECK(std::holds_alternative<RzPlus>(g));
  CHECK(eval_additive(s.circuit).max_abs_diff(eval_mult(gadget)) < 1e-12);
}

TEST_CASE("swap-heavy circuits move their swaps to the end", "[rewrite]") {
  AdditiveCircuit c(4);
  c.append(XPlus{0, 3}).append(RyPlus{0, 1, kT}).append(XPlus{1, 2}).append(RzPlus{2, kP}).append(XPlus{0, 1});
  const auto s = canonicalize(c);
  for (const auto& g : s.circuit.gates()) CHECK_FALSE(std::holds_alternative<XPlus>(g));
  CHECK_FALSE(s.trailing.is_identity());
  CHECK(with_trailing(s).max_abs_diff(eval_additive(c)) < 1e-12);
}

TEST_CASE("every rewrite preserves the unitary", "[rewrite][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + testing::pick(rng, 8);
    const auto c = testing::random_additive_circuit(rng, dim, testing::pick(rng, 25));
    const auto u = eval_additive(c);
    const auto pushed = push_swaps_right(c);
    CHECK(with_trailing(pushed).max_abs_diff(u) < 1e-10);
    const auto merged = merge_adjacent(pushed.circuit);
    CHECK(merged.size() <= pushed.circuit.size());
    CHECK(eval_additive(merged).max_abs_diff(eval_additive(pushed.circuit)) < 1e-10);
    const auto canon = canonicalize(c);
    CHECK(with_trailing(canon).max_abs_diff(u) < 1e-10);
    CHECK(canonicalize(canon.circuit).circuit.gates() == canon.circuit.gates());
  }
}

TEST_CASE("canonicalizing random mult circuits is idempotent", "[rewrite][property]") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(testing::pick(rng, 3));
    const auto t = translate_circuit(testing::random_mult_circuit(rng, n, 15));
    const auto canon = canonicalize(t);
    CHECK(with_trailing(canon).max_abs_diff(eval_additive(t)) < 1e-10);
    CHECK(canonicalize(canon.circuit).circuit.gates() == canon.circuit.gates());
  }
}
