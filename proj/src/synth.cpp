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

#include "addcirc/synth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

unsigned log2_exact(std::size_t x) { return static_cast<unsigned>(std::countr_zero(x)); }

int hamming(std::size_t a, std::size_t b) { return std::popcount(a ^ b); }

// Scatters the low bits of `value` onto the set bits of `mask`, lowest first.
std::size_t deposit(std::size_t value, std::size_t mask) {
  std::size_t out = 0;
  for (std::size_t bit = 1; mask != 0; bit <<= 1) {
    const std::size_t low = mask & (~mask + 1);
    if (value & bit) out |= low;
    mask ^= low;
  }
  return out;
}

std::vector<Qubit> qubits_of(std::size_t mask) {
  std::vector<Qubit> out;
  for (Qubit q = 0; mask != 0; ++q, mask >>= 1) {
    if (mask & 1) out.push_back(q);
  }
  return out;
}

// Minimum-cost perfect matching of rows to columns of a square matrix
// (Hungarian method, potentials form). Returns column of each row.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<long>>& cost) {
  const std::size_t n = cost.size();
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<long> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);  // match[col] = row, 1-based
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<long> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

// Removes X(q) pairs with nothing else on q in between.
void cancel_adjacent_x(std::vector<MultGate>& gates) {
  auto touches = [](const MultGate& g, Qubit q) {
    return std::visit(
        detail::overloaded{
            [&](const Ry& x) { return x.qubit == q; },
            [&](const Rz& x) { return x.qubit == q; },
            [&](const X& x) { return x.qubit == q; },
            [&](const CX& x) { return x.control == q || x.target == q; },
            [&](const MCX& x) {
              return x.target == q ||
                     std::find(x.controls.begin(), x.controls.end(), q) != x.controls.end();
            },
            [&](const MCRy& x) {
              return x.target == q ||
                     std::find(x.controls.begin(), x.controls.end(), q) != x.controls.end();
            },
            [&](const CPhase& x) {
              return std::find(x.controls.begin(), x.controls.end(), q) != x.controls.end();
            }},
        g);
  };
  std::vector<MultGate> out;
  out.reserve(gates.size());
  for (const auto& g : gates) {
    if (const auto* x = std::get_if<X>(&g)) {
      bool cancelled = false;
      for (std::size_t k = out.size(); k-- > 0;) {
        if (!touches(out[k], x->qubit)) continue;
        if (std::holds_alternative<X>(out[k])) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
          cancelled = true;
        }
        break;
      }
      if (cancelled) continue;
    }
    out.push_back(g);
  }
  gates = std::move(out);
}

// Swaps bitstrings g and g ^ bit: flip `bit` when every other qubit matches g.
void emit_adjacent_swap(
    std::size_t g, std::size_t bit, unsigned n_qubits, std::vector<MultGate>& out) {
  const std::size_t all = (std::size_t{1} << n_qubits) - 1;
  const std::size_t controls = all & ~bit;
  const Qubit target = log2_exact(bit);
  const auto flips = qubits_of(controls & ~g);
  for (Qubit q : flips) out.emplace_back(X{q});
  if (controls == 0) {
    out.emplace_back(X{target});
  } else {
    out.emplace_back(MCX{qubits_of(controls), target});
  }
  for (Qubit q : flips) out.emplace_back(X{q});
}

struct Candidate {
  long cost = std::numeric_limits<long>::max();
  std::vector<std::pair<std::size_t, std::size_t>> targets;  // (dim, bitstring)
};

// Cheapest relocation of the stack onto a (k+1)-subcube with edges along a
// single bit, all members oriented alike.
Candidate choose_target(const StackedVertex& stack, const PlacementMap& placement) {
  const unsigned n = placement.n_qubits();
  const std::size_t length = stack.length();
  const unsigned k = log2_exact(length);
  const std::size_t all = (std::size_t{1} << n) - 1;
  Candidate best;
  std::vector<std::vector<long>> cost(length, std::vector<long>(length));
  for (unsigned t = 0; t < n; ++t) {
    const std::size_t tbit = std::size_t{1} << t;
    for (std::size_t varying = 0; varying <= all; ++varying) {
      if (!(varying & tbit) || std::popcount(varying) != static_cast<int>(k + 1)) continue;
      const std::size_t fixed = all & ~varying;
      const std::size_t spread = varying & ~tbit;
      const std::size_t fixed_count = std::size_t{1} << std::popcount(fixed);
      for (std::size_t fv = 0; fv < fixed_count; ++fv) {
        const std::size_t fixed_value = deposit(fv, fixed);
        for (int orientation = 0; orientation < 2; ++orientation) {
          auto ends = [&](std::size_t edge) {
            const std::size_t low = fixed_value | deposit(edge, spread);
            const std::size_t high = low | tbit;
            return orientation == 0 ? std::pair{low, high} : std::pair{high, low};
          };
          for (std::size_t m = 0; m < length; ++m) {
            const auto& mem = stack.members[m];
            const std::size_t a = placement.bits_of(mem.first);
            const std::size_t b = placement.bits_of(mem.second);
            for (std::size_t e = 0; e < length; ++e) {
              const auto [x, y] = ends(e);
              cost[m][e] = hamming(a, x) + hamming(b, y);
            }
          }
          const auto assignment = min_cost_assignment(cost);
          long total = 0;
          for (std::size_t m = 0; m < length; ++m) total += cost[m][assignment[m]];
          if (total < best.cost) {
            best.cost = total;
            best.targets.clear();
            for (std::size_t m = 0; m < length; ++m) {
              const auto [x, y] = ends(assignment[m]);
              best.targets.emplace_back(stack.members[m].first, x);
              best.targets.emplace_back(stack.members[m].second, y);
            }
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

PlacementMap::PlacementMap(unsigned n_qubits)
    : n_qubits_(n_qubits),
      bits_of_(std::size_t{1} << n_qubits),
      dim_at_(std::size_t{1} << n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count for a placement map");
  }
  std::iota(bits_of_.begin(), bits_of_.end(), std::size_t{0});
  std::iota(dim_at_.begin(), dim_at_.end(), std::size_t{0});
}

PlacementMap PlacementMap::from_bitstrings(
    unsigned n_qubits, std::vector<std::size_t> bits_of_dim) {
  PlacementMap p(n_qubits);
  if (bits_of_dim.size() != p.dim()) {
    throw std::invalid_argument("placement size does not match qubit count");
  }
  const Permutation perm = Permutation::from_image(bits_of_dim);
  p.bits_of_ = perm.image();
  p.dim_at_ = perm.inverse().image();
  return p;
}

void PlacementMap::swap_bitstrings(std::size_t a, std::size_t b) {
  const std::size_t da = dim_at_.at(a);
  const std::size_t db = dim_at_.at(b);
  dim_at_[a] = db;
  dim_at_[b] = da;
  bits_of_[da] = b;
  bits_of_[db] = a;
}

std::vector<StackedVertex> stack_vertices(const AdditiveDag& dag) {
  const auto order = dag.topological_order();
  const auto reach = transitive_closure(dag);
  std::vector<StackedVertex> stacks;
  std::vector<std::set<std::size_t>> later;  // stack-level ordering edges
  std::vector<std::size_t> stack_of(dag.vertices().size());

  auto stack_reaches = [&](std::size_t from, std::size_t to) {
    std::vector<bool> seen(stacks.size(), false);
    std::vector<std::size_t> todo{from};
    while (!todo.empty()) {
      const std::size_t s = todo.back();
      todo.pop_back();
      if (s == to) return true;
      for (std::size_t nxt : later[s]) {
        if (!seen[nxt]) {
          seen[nxt] = true;
          todo.push_back(nxt);
        }
      }
    }
    return false;
  };

  for (VertexId v : order) {
    const RyVertex& vx = dag.vertex(v);
    const auto preds = dag.predecessors(v);
    std::size_t chosen = stacks.size();
    for (std::size_t s = 0; s < stacks.size(); ++s) {
      if (!stacks[s].angle.equivalent(vx.angle, kRotationPeriod)) continue;
      const bool independent = std::all_of(
          stacks[s].members.begin(), stacks[s].members.end(), [&](const StackMember& m) {
            const bool disjoint = m.first != vx.dims[0] && m.first != vx.dims[1] &&
                                  m.second != vx.dims[0] && m.second != vx.dims[1];
            return disjoint && !reach[m.vertex][v] && !reach[v][m.vertex];
          });
      if (!independent) continue;
      // Joining must not make the stack-level order cyclic.
      const bool cyclic = std::any_of(preds.begin(), preds.end(), [&](VertexId p) {
        return stack_reaches(s, stack_of[p]);
      });
      if (cyclic) continue;
      chosen = s;
      break;
    }
    if (chosen == stacks.size()) {
      stacks.push_back(StackedVertex{vx.angle, {}});
      later.emplace_back();
    }
    stacks[chosen].members.push_back(StackMember{v, vx.dims[0], vx.dims[1]});
    stack_of[v] = chosen;
    for (VertexId p : preds) {
      if (stack_of[p] != chosen) later[stack_of[p]].insert(chosen);
    }
  }

  // Order the stacks themselves, smallest index first among ready ones.
  std::vector<std::size_t> indegree(stacks.size(), 0);
  for (const auto& succ : later) {
    for (std::size_t s : succ) ++indegree[s];
  }
  std::set<std::size_t> ready;
  for (std::size_t s = 0; s < stacks.size(); ++s) {
    if (indegree[s] == 0) ready.insert(s);
  }
  std::vector<StackedVertex> ordered;
  ordered.reserve(stacks.size());
  while (!ready.empty()) {
    const std::size_t s = *ready.begin();
    ready.erase(ready.begin());
    ordered.push_back(stacks[s]);
    for (std::size_t nxt : later[s]) {
      if (--indegree[nxt] == 0) ready.insert(nxt);
    }
  }
  if (ordered.size() != stacks.size()) {
    throw std::logic_error("stack ordering became cyclic");
  }
  return ordered;
}

std::vector<StackedVertex> split_power_of_two(const StackedVertex& stack) {
  std::vector<StackedVertex> out;
  std::size_t offset = 0;
  const std::size_t length = stack.length();
  for (std::size_t part = std::bit_floor(length); part != 0; part >>= 1) {
    if (!(length & part)) continue;
    StackedVertex piece{stack.angle, {}};
    piece.members.assign(
        stack.members.begin() + static_cast<std::ptrdiff_t>(offset),
        stack.members.begin() + static_cast<std::ptrdiff_t>(offset + part));
    offset += part;
    out.push_back(std::move(piece));
  }
  return out;
}

ConstraintReport check_constraints(const StackedVertex& stack, const PlacementMap& placement) {
  if (!is_power_of_two(stack.length())) {
    throw std::invalid_argument("constraint check needs a power-of-two stack");
  }
  const unsigned k = log2_exact(stack.length());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& m : stack.members) {
    pairs.emplace_back(placement.bits_of(m.first), placement.bits_of(m.second));
  }
  const std::size_t direction = pairs[0].first ^ pairs[0].second;
  std::size_t varying = 0;
  for (const auto& [a, b] : pairs) varying |= (a ^ pairs[0].first) | (b ^ pairs[0].first);

  ConstraintReport report;
  std::vector<std::pair<std::size_t, std::size_t>> bad_edge, bad_parallel, bad_aligned;
  const bool ascending = pairs[0].first < pairs[0].second;
  for (const auto& p : pairs) {
    const std::size_t diff = p.first ^ p.second;
    if (std::popcount(diff) != 1) bad_edge.push_back(p);
    if (diff != direction || std::popcount(diff) != 1) bad_parallel.push_back(p);
    if ((p.first < p.second) != ascending) bad_aligned.push_back(p);
  }
  report.edge_ok = bad_edge.empty();
  report.parallel_ok = bad_parallel.empty();
  report.dense_ok = std::popcount(varying) <= static_cast<int>(k + 1);
  report.aligned_ok = bad_aligned.empty();
  if (!report.edge_ok) {
    report.witness = bad_edge;
  } else if (!report.parallel_ok) {
    report.witness = bad_parallel;
  } else if (!report.dense_ok) {
    report.witness = pairs;
  } else if (!report.aligned_ok) {
    report.witness = bad_aligned;
  }
  return report;
}

std::vector<MultGate> synth_stacked_vertex(
    const StackedVertex& stack, const PlacementMap& placement, unsigned n_qubits) {
  if (placement.n_qubits() != n_qubits) {
    throw SynthesisError("placement does not match the qubit count");
  }
  const ConstraintReport report = check_constraints(stack, placement);
  if (!report.satisfied()) {
    throw SynthesisError("stacked vertex violates its connectivity constraints");
  }
  const std::size_t all = (std::size_t{1} << n_qubits) - 1;
  const std::size_t a0 = placement.bits_of(stack.members[0].first);
  const std::size_t tbit = a0 ^ placement.bits_of(stack.members[0].second);
  std::size_t varying = tbit;
  for (const auto& m : stack.members) {
    varying |= (placement.bits_of(m.first) ^ a0) | (placement.bits_of(m.second) ^ a0);
  }
  const std::size_t fixed = all & ~varying;
  const Qubit target = log2_exact(tbit);
  // A member whose first dimension sits on the 1 side rotates the other way.
  const Angle angle = (a0 & tbit) ? -stack.angle : stack.angle;

  std::vector<MultGate> out;
  const auto flips = qubits_of(fixed & ~a0);
  for (Qubit q : flips) out.emplace_back(X{q});
  if (fixed == 0) {
    out.emplace_back(Ry{target, angle});
  } else {
    out.emplace_back(MCRy{qubits_of(fixed), target, angle});
  }
  for (Qubit q : flips) out.emplace_back(X{q});
  return out;
}

RoutingSchedule route(const std::vector<StackedVertex>& stacks, const PlacementMap& initial) {
  RoutingSchedule schedule{{}, initial, 0};
  PlacementMap placement = initial;
  for (const auto& stack : stacks) {
    if (check_constraints(stack, placement).satisfied()) {
      schedule.segments.push_back({stack, Permutation(placement.dim()), placement});
      continue;
    }
    const PlacementMap before = placement;
    // Targets are distinct, so a dimension already moved into place is
    // never displaced by a later swap.
    for (const auto& [dim, bits] : choose_target(stack, placement).targets) {
      if (placement.bits_of(dim) != bits) {
        placement.swap_bitstrings(placement.bits_of(dim), bits);
      }
    }
    std::vector<std::size_t> image(placement.dim());
    for (std::size_t d = 0; d < placement.dim(); ++d) {
      image[before.bits_of(d)] = placement.bits_of(d);
    }
    schedule.segments.push_back({stack, Permutation::from_image(std::move(image)), placement});
    ++schedule.permutation_count;
  }
  schedule.final_placement = placement;
  return schedule;
}

std::vector<MultGate> synth_permutation(const Permutation& perm, unsigned n_qubits) {
  if (perm.size() != (std::size_t{1} << n_qubits)) {
    throw SynthesisError("permutation size must be 2^n");
  }
  std::vector<MultGate> out;
  for (const auto& [a, b] : perm.transpositions()) {
    // Gray-code path a = g_0, ..., g_h = b, flipping low bits first.
    std::vector<std::pair<std::size_t, std::size_t>> steps;  // (codeword, bit)
    std::size_t g = a;
    for (std::size_t diff = a ^ b; diff != 0; diff &= diff - 1) {
      const std::size_t bit = diff & (~diff + 1);
      steps.emplace_back(g, bit);
      g ^= bit;
    }
    for (const auto& [code, bit] : steps) emit_adjacent_swap(code, bit, n_qubits, out);
    for (std::size_t s = steps.size() - 1; s-- > 0;) {
      emit_adjacent_swap(steps[s].first, steps[s].second, n_qubits, out);
    }
  }
  cancel_adjacent_x(out);
  return out;
}

MultCircuit synth_phases(const std::vector<Angle>& phases, unsigned n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (phases.size() != dim) {
    throw SynthesisError("phase vector length must be 2^n");
  }
  // Möbius inversion over subsets: coeff[S] = Σ_{T⊆S} (-1)^{|S|-|T|} ψ(T).
  std::vector<double> coeff(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    coeff[b] = phases[b].radians() - phases[0].radians();
  }
  for (std::size_t bit = 1; bit < dim; bit <<= 1) {
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & bit) coeff[s] -= coeff[s ^ bit];
    }
  }
  MultCircuit out(n_qubits);
  out.add_global_phase(phases[0]);
  for (std::size_t s = 1; s < dim; ++s) {
    const Angle c(coeff[s]);
    if (c.is_zero(kPhasePeriod)) continue;
    if (std::popcount(s) == 1) {
      // Rz(c) = e^{-ic/2} diag(1, e^{ic})
      out.append(Rz{log2_exact(s), c});
      out.add_global_phase(c / 2);
    } else {
      out.append(CPhase{qubits_of(s), c});
    }
  }
  return out;
}

SynthesisReport synthesize(const AdditiveDag& dag) {
  const std::size_t dim = dag.dim();
  if (!is_power_of_two(dim)) throw SynthesisError("dimension must be a power of two");
  if (dim == 1) throw SynthesisError("synthesis needs at least one qubit");
  dag.validate();
  const unsigned n = log2_exact(dim);
  std::vector<StackedVertex> stacks;
  for (const auto& stack : stack_vertices(dag)) {
    for (auto& piece : split_power_of_two(stack)) stacks.push_back(std::move(piece));
  }
  const RoutingSchedule schedule = route(stacks, PlacementMap(n));

  std::vector<MultGate> gates;
  Angle global_phase = dag.global_phase();
  auto emit_phases = [&](const std::vector<Angle>& phases) {
    const bool any = std::any_of(phases.begin(), phases.end(), [](const Angle& a) {
      return !a.is_zero(kPhasePeriod);
    });
    if (!any) return;
    const MultCircuit diag = synth_phases(phases, n);
    gates.insert(gates.end(), diag.gates().begin(), diag.gates().end());
    global_phase += diag.global_phase();
  };

  PlacementMap placement(n);
  for (const auto& segment : schedule.segments) {
    std::vector<Angle> phases(dim);
    for (const auto& member : segment.stack.members) {
      const RyVertex& vx = dag.vertex(member.vertex);
      for (unsigned s = 0; s < 2; ++s) {
        phases[placement.bits_of(vx.dims[s])] += dag.edge(vx.in[s]).phase;
      }
    }
    emit_phases(phases);
    if (!segment.move.is_identity()) {
      const auto moves = synth_permutation(segment.move, n);
      gates.insert(gates.end(), moves.begin(), moves.end());
    }
    const auto rotation = synth_stacked_vertex(segment.stack, segment.placement, n);
    gates.insert(gates.end(), rotation.begin(), rotation.end());
    placement = segment.placement;
  }

  std::vector<Angle> final_phases(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    final_phases[placement.bits_of(d)] = dag.edge(dag.output_edge(d)).phase;
  }
  emit_phases(final_phases);

  // Dimension d sits on bits_of(d) and must end on trailing(d).
  std::vector<std::size_t> restore(dim);
  for (std::size_t d = 0; d < dim; ++d) restore[placement.bits_of(d)] = dag.trailing()(d);
  const Permutation restore_perm = Permutation::from_image(std::move(restore));
  if (!restore_perm.is_identity()) {
    const auto moves = synth_permutation(restore_perm, n);
    gates.insert(gates.end(), moves.begin(), moves.end());
  }
  cancel_adjacent_x(gates);

  MultCircuit out(n);
  out.append(gates);
  out.add_global_phase(global_phase);

  SynthesisReport report{out, {}, schedule.permutation_count, schedule.segments.size()};
  for (const auto& g : out.gates()) ++report.counts[gate_kind(g)];
  return report;
}

}  // namespace addcirc
