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

#include "addcirc/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

namespace {

bool is_zero_gate(const AdditiveGate& gate) {
  return std::visit(
      overloaded{
          [](const RyPlus& g) { return g.angle.is_zero(kRotationPeriod); },
          [](const RzPlus& g) { return g.angle.is_zero(kPhasePeriod); },
          [](const XPlus&) { return false; }},
      gate);
}

// Adds `incoming` into `existing` when both act on the same wires with the
// same kind. Returns false when not mergeable.
bool try_merge(AdditiveGate& existing, const AdditiveGate& incoming) {
  if (auto* a = std::get_if<RyPlus>(&existing)) {
    const auto* b = std::get_if<RyPlus>(&incoming);
    if (b && a->first == b->first && a->second == b->second) {
      a->angle += b->angle;
      return true;
    }
    return false;
  }
  if (auto* a = std::get_if<RzPlus>(&existing)) {
    const auto* b = std::get_if<RzPlus>(&incoming);
    if (b && a->dim == b->dim) {
      a->angle += b->angle;
      return true;
    }
  }
  return false;
}

// Single left-to-right sweep. Returns true if anything changed.
bool merge_pass(std::vector<AdditiveGate>& gates) {
  bool changed = false;
  std::vector<std::optional<AdditiveGate>> out;
  out.reserve(gates.size());
  for (const auto& gate : gates) {
    if (is_zero_gate(gate)) {
      changed = true;
      continue;
    }
    bool merged = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (!out[k]) continue;
      AdditiveGate combined = *out[k];
      if (try_merge(combined, gate)) {
        // Same wires and kind as `gate`, so it commutes past the gates in between.
        out[k].reset();
        if (!is_zero_gate(combined)) out.emplace_back(combined);
        merged = changed = true;
        break;
      }
      if (!gates_commute(*out[k], gate)) break;
    }
    if (!merged) out.emplace_back(gate);
  }
  gates.clear();
  for (auto& g : out) {
    if (g) gates.push_back(*g);
  }
  return changed;
}

using OrderKey = std::tuple<std::size_t, int, double, std::size_t>;

OrderKey order_key(const AdditiveGate& gate, std::size_t position) {
  return std::visit(
      overloaded{
          [&](const RzPlus& g) { return OrderKey{g.dim, 0, g.angle.radians(), position}; },
          [&](const RyPlus& g) {
            return OrderKey{
                std::min(g.first, g.second), 1, g.angle.radians(), position};
          },
          [&](const XPlus& g) {
            return OrderKey{std::min(g.first, g.second), 2, 0.0, position};
          }},
      gate);
}

// Kahn's algorithm over the non-commutation order, always emitting the
// ready gate with the smallest key.
std::vector<AdditiveGate> commuting_sort(const std::vector<AdditiveGate>& gates) {
  const std::size_t n = gates.size();
  std::vector<std::vector<std::size_t>> later(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!gates_commute(gates[a], gates[b])) {
        later[a].push_back(b);
        ++indegree[b];
      }
    }
  }
  std::set<OrderKey> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.insert(order_key(gates[i], i));
  }
  std::vector<AdditiveGate> out;
  out.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = std::get<3>(*ready.begin());
    ready.erase(ready.begin());
    out.push_back(gates[i]);
    for (std::size_t j : later[i]) {
      if (--indegree[j] == 0) ready.insert(order_key(gates[j], j));
    }
  }
  return out;
}

}  // namespace

bool gates_commute(const AdditiveGate& a, const AdditiveGate& b) {
  if (std::holds_alternative<RzPlus>(a) && std::holds_alternative<RzPlus>(b)) {
    return true;
  }
  for (std::size_t x : touched_dims(a)) {
    for (std::size_t y : touched_dims(b)) {
      if (x == y) return false;
    }
  }
  return true;
}

SwapFreeCircuit push_swaps_right(const AdditiveCircuit& circuit) {
  const std::size_t dim = circuit.dim();
  Permutation sigma(dim);
  // preimage[d]: which dimension of the swap-free body ends up at d.
  std::vector<std::size_t> preimage = sigma.image();
  AdditiveCircuit body(dim);
  body.set_global_phase(circuit.global_phase());
  for (const auto& gate : circuit.gates()) {
    std::visit(
        overloaded{
            [&](const XPlus& g) {
              sigma.then_transpose(g.first, g.second);
              std::swap(preimage[g.first], preimage[g.second]);
            },
            [&](const RzPlus& g) { body.append(RzPlus{preimage[g.dim], g.angle}); },
            [&](const RyPlus& g) {
              body.append(RyPlus{preimage[g.first], preimage[g.second], g.angle});
            }},
        gate);
  }
  return {std::move(body), std::move(sigma)};
}

RyPlus normalize_ry_orientation(const RyPlus& gate) {
  if (gate.first < gate.second) return gate;
  return RyPlus{gate.second, gate.first, -gate.angle};
}

AdditiveCircuit merge_adjacent(const AdditiveCircuit& circuit) {
  std::vector<AdditiveGate> gates;
  gates.reserve(circuit.size());
  for (const auto& gate : circuit.gates()) {
    if (std::holds_alternative<XPlus>(gate)) {
      throw CircuitInvalidity("merge_adjacent expects a swap-free circuit");
    }
    if (const auto* ry = std::get_if<RyPlus>(&gate)) {
      gates.emplace_back(normalize_ry_orientation(*ry));
    } else {
      gates.push_back(gate);
    }
  }
  // No rule adds gates, so every productive pass removes at least one.
  const std::size_t cap = 10 * std::max<std::size_t>(gates.size(), 1);
  std::size_t passes = 0;
  while (merge_pass(gates)) {
    if (++passes > cap) {
      throw std::logic_error("merge_adjacent did not reach a fixpoint");
    }
  }
  AdditiveCircuit out(circuit.dim());
  out.set_global_phase(circuit.global_phase());
  for (const auto& g : gates) out.append(g);
  return out;
}

SwapFreeCircuit canonicalize(const AdditiveCircuit& circuit) {
  SwapFreeCircuit pushed = push_swaps_right(circuit);
  const AdditiveCircuit merged = merge_adjacent(pushed.circuit);
  AdditiveCircuit out(circuit.dim());
  out.set_global_phase(circuit.global_phase());
  for (const auto& g : commuting_sort(merged.gates())) out.append(g);
  return {std::move(out), std::move(pushed.trailing)};
}

}  // namespace addcirc
