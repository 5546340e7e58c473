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

#include <bit>
#include <random>

#include "addcirc/semantics.hpp"
#include "addcirc/translate.hpp"
#include "catch_amalgamated.hpp"
#include "test_support.hpp"

using namespace addcirc;

namespace {
const Angle kT(0.61);
}

TEST_CASE("translate_gate examples", "[translate]") {
  CHECK(translate_gate(CX{1, 0}, 2).gates == std::vector<AdditiveGate>{XPlus{2, 3}});
  CHECK(translate_gate(Ry{0, kT}, 2).gates ==
        std::vector<AdditiveGate>{RyPlus{0, 1, kT}, RyPlus{2, 3, kT}});
  const auto rz = translate_gate(Rz{0, kT}, 1);
  CHECK(rz.gates == std::vector<AdditiveGate>{RzPlus{1, kT}});
  CHECK(rz.phase.radians() == -kT.radians() / 2);
  CHECK(translate_gate(MCRy{{1}, 0, kT}, 2).gates == std::vector<AdditiveGate>{RyPlus{2, 3, kT}});
  CHECK(translate_gate(X{1}, 2).gates == std::vector<AdditiveGate>{XPlus{0, 2}, XPlus{1, 3}});
  const auto cp = translate_gate(CPhase{{0, 1}, kT}, 2);
  CHECK(cp.gates == std::vector<AdditiveGate>{RzPlus{3, kT}});
  CHECK(cp.phase.radians() == 0.0);
  CHECK_THROWS_AS(translate_gate(Ry{3, kT}, 2), CircuitInvalidity);
}

TEST_CASE("translate_circuit examples", "[translate]") {
  const auto empty = translate_circuit(MultCircuit(2));
  CHECK(empty.dim() == 4);
  CHECK(empty.empty());

  MultCircuit cry(2);
  cry.append(Ry{0, kT / 2}).append(CX{1, 0}).append(Ry{0, -kT / 2}).append(CX{1, 0});
  const auto t = translate_circuit(cry);
  std::size_t ry = 0, x = 0;
  for (const auto& g : t.gates()) {
    ry += std::holds_alternative<RyPlus>(g);
    x += std::holds_alternative<XPlus>(g);
  }
  CHECK(ry == 4);
  CHECK(x == 2);

  MultCircuit gadget(3);
  gadget.append(CX{0, 1}).append(CX{1, 2}).append(Rz{2, kT}).append(CX{1, 2}).append(CX{0, 1});
  gadget.append(Rz{0, kT}).append(CPhase{{1, 2}, kT});
  // A diagonal circuit built only from diagonal gates carries no rotations.
  MultCircuit diag(3);
  diag.append(Rz{0, kT}).append(Rz{2, -kT}).append(CPhase{{0, 1, 2}, kT});
  for (const auto& g : translate_circuit(diag).gates()) CHECK(std::holds_alternative<RzPlus>(g));
  CHECK(eval_additive(translate_circuit(gadget)).max_abs_diff(eval_mult(gadget)) < 1e-12);
}

TEST_CASE("translation is exact including phase", "[translate][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(testing::pick(rng, 4));
    const auto c = testing::random_mult_circuit(rng, n, 25, true);
    CHECK(eval_additive(translate_circuit(c)).max_abs_diff(eval_mult(c)) < 1e-9);
  }
}

TEST_CASE("gate-count law", "[translate][property]") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(testing::pick(rng, 4));
    const auto q = testing::random_qubits(rng, n, 1 + testing::pick(rng, n));
    const std::vector<Qubit> controls(q.begin() + 1, q.end());
    const std::size_t expected = std::size_t{1} << (n - 1 - controls.size());
    CHECK(translate_gate(MCRy{controls, q[0], kT}, n).gates.size() == expected);
    CHECK(translate_gate(MCX{controls, q[0]}, n).gates.size() == expected);
  }
}
