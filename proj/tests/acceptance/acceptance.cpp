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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <string>

#include "addcirc/dag.hpp"
#include "addcirc/render.hpp"
#include "addcirc/rewrite.hpp"
#include "addcirc/semantics.hpp"
#include "addcirc/synth.hpp"
#include "addcirc/translate.hpp"
#include "test_support.hpp"

using namespace addcirc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::size_t count_kind(const SynthesisReport& r, const std::string& kind) {
  const auto it = r.counts.find(kind);
  return it == r.counts.end() ? 0 : it->second;
}

SynthesisReport full_pipeline(const MultCircuit& c) {
  return synthesize(to_dag(canonicalize(translate_circuit(c))));
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Outcome ac1_round_trip() {
  std::mt19937_64 rng(20261014);
  const auto start = std::chrono::steady_clock::now();
  double worst = 1.0;
  std::size_t total = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = testing::random_mult_circuit(rng, n, 15);
      worst = std::min(worst, fidelity(eval_mult(full_pipeline(c).output), eval_mult(c)));
      ++total;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = worst >= 1 - 1e-9 && seconds < 60.0;
  return {pass, std::to_string(total) + " circuits, min fidelity " + fmt("%.15f", worst) +
                    ", " + fmt("%.2f", seconds) + " s"};
}

Outcome ac2_cry_recovery() {
  const double theta = 1.234;
  MultCircuit a(2), b(2);
  a.append(Ry{0, Angle(theta / 2)}).append(CX{1, 0}).append(Ry{0, Angle(-theta / 2)}).append(CX{1, 0});
  b.append(CX{1, 0}).append(Ry{0, Angle(-theta / 2)}).append(CX{1, 0}).append(Ry{0, Angle(theta / 2)});
  const auto ca = canonicalize(translate_circuit(a));
  const auto cb = canonicalize(translate_circuit(b));
  bool ok = ca.circuit.size() == 1 && ca.trailing.is_identity();
  if (ok) {
    const auto* g = std::get_if<RyPlus>(&ca.circuit.gates()[0]);
    ok = g != nullptr && g->first == 2 && g->second == 3 && std::abs(g->angle.radians() - theta) < 1e-10;
  }
  const bool same = ca.circuit.gates() == cb.circuit.gates() && ca.trailing == cb.trailing;
  const auto report = synthesize(to_dag(ca));
  const auto& out = report.output.gates();
  const bool one_mcry = out.size() == 1 && std::holds_alternative<MCRy>(out[0]) &&
                        std::get<MCRy>(out[0]).controls.size() == 1;
  const double err = eval_mult(report.output).max_abs_diff(eval_mult(a));
  const bool pass = ok && same && one_mcry && report.routing_permutations == 0 && err < 1e-10;
  return {pass, std::string("canonical ") + (ok ? "ok" : "wrong") + ", variants " +
                    (same ? "identical" : "differ") + ", gates " + std::to_string(out.size()) +
                    ", routing " + std::to_string(report.routing_permutations) + ", max err " +
                    fmt("%.2e", err)};
}

Outcome ac3_blowup_reversal() {
  const double theta = 0.77;
  MultCircuit c(4);
  c.append(Ry{0, Angle(theta)});
  const auto translated = translate_circuit(c);
  const std::size_t ry_plus = std::count_if(
      translated.gates().begin(), translated.gates().end(),
      [](const AdditiveGate& g) { return std::holds_alternative<RyPlus>(g); });
  const auto report = synthesize(to_dag(canonicalize(translated)));
  const auto& out = report.output.gates();
  const bool single_ry = out.size() == 1 && std::holds_alternative<Ry>(out[0]);
  const std::size_t entangling = count_kind(report, "cx") + count_kind(report, "mcx");
  const double err = eval_mult(report.output).max_abs_diff(eval_mult(c));
  const bool pass = translated.size() == 8 && ry_plus == 8 && single_ry && entangling == 0 && err < 1e-10;
  return {pass, std::to_string(ry_plus) + " RyPlus -> " + std::to_string(out.size()) +
                    " gate(s), cx/mcx " + std::to_string(entangling) + ", max err " + fmt("%.2e", err)};
}

Outcome ac4_identities() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  std::size_t checks = 0;
  auto m = [](std::size_t dim, std::vector<AdditiveGate> gates) {
    AdditiveCircuit c(dim);
    for (const auto& g : gates) c.append(g);
    return eval_additive(c);
  };
  auto record = [&](const UnitaryMatrix& a, const UnitaryMatrix& b) {
    worst = std::max(worst, a.max_abs_diff(b));
    ++checks;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 3 + testing::pick(rng, 6);
    const Angle t(testing::random_angle(rng)), u(testing::random_angle(rng));
    // Three distinct wires, plus a disjoint pair when room allows.
    std::vector<std::size_t> w(dim);
    std::iota(w.begin(), w.end(), std::size_t{0});
    std::shuffle(w.begin(), w.end(), rng);
    const std::size_t i = w[0], j = w[1], k = w[2];

    // 1: gates pushed through a swap are relabelled by the swap.
    auto sigma = [&](std::size_t d) { return d == i ? k : d == k ? i : d; };
    record(m(dim, {XPlus{i, k}, RyPlus{i, j, t}}), m(dim, {RyPlus{sigma(i), sigma(j), t}, XPlus{i, k}}));
    record(m(dim, {XPlus{i, k}, RzPlus{i, t}}), m(dim, {RzPlus{sigma(i), t}, XPlus{i, k}}));
    record(m(dim, {XPlus{i, k}, XPlus{i, j}}), m(dim, {XPlus{sigma(i), sigma(j)}, XPlus{i, k}}));
    // 2: swapping the inputs of a rotation flips its angle.
    record(m(dim, {RyPlus{i, j, t}}), m(dim, {RyPlus{j, i, -t}}));
    record(m(dim, {XPlus{i, j}, RyPlus{i, j, t}, XPlus{i, j}}), m(dim, {RyPlus{i, j, -t}}));
    // 3: rotations on the same wires merge.
    record(m(dim, {RyPlus{i, j, t}, RyPlus{i, j, u}}), m(dim, {RyPlus{i, j, t + u}}));
    record(m(dim, {RzPlus{i, t}, RzPlus{i, u}}), m(dim, {RzPlus{i, t + u}}));
    // 4: rotations on different wires commute.
    record(m(dim, {RyPlus{i, j, t}, RzPlus{k, u}}), m(dim, {RzPlus{k, u}, RyPlus{i, j, t}}));
    record(m(dim, {RzPlus{i, t}, RzPlus{j, u}}), m(dim, {RzPlus{j, u}, RzPlus{i, t}}));
    if (dim >= 4) {
      const std::size_t l = w[3];
      record(m(dim, {RyPlus{i, j, t}, RyPlus{k, l, u}}), m(dim, {RyPlus{k, l, u}, RyPlus{i, j, t}}));
    }
  }
  return {worst < 1e-12, std::to_string(checks) + " checks, max elementwise diff " + fmt("%.2e", worst)};
}

Outcome ac5_classical_subset() {
  std::mt19937_64 rng(5);
  std::size_t exact = 0, reproduced = 0;
  for (int trial = 0; trial < 100; ++trial) {
    AdditiveCircuit c(8);
    const std::size_t gates = 1 + testing::pick(rng, 20);
    for (std::size_t g = 0; g < gates; ++g) {
      const std::size_t a = testing::pick(rng, 8);
      c.append(XPlus{a, (a + 1 + testing::pick(rng, 7)) % 8});
    }
    const auto u = eval_additive(c);
    std::vector<std::size_t> image(8, 8);
    bool zero_one = true;
    for (std::size_t col = 0; col < 8; ++col) {
      for (std::size_t row = 0; row < 8; ++row) {
        if (u(row, col) == Complex(1)) {
          if (image[col] != 8) zero_one = false;
          image[col] = row;
        } else if (u(row, col) != Complex(0)) {
          zero_one = false;
        }
      }
      if (image[col] == 8) zero_one = false;
    }
    if (!zero_one) continue;
    ++exact;
    MultCircuit synth(3);
    synth.append(synth_permutation(Permutation::from_image(image), 3));
    if (eval_mult(synth).max_abs_diff(u) == 0.0) ++reproduced;
  }
  return {exact == 100 && reproduced == 100,
          std::to_string(exact) + "/100 exact permutation matrices, " + std::to_string(reproduced) +
              "/100 reproduced exactly"};
}

Outcome ac6_phase_synthesis() {
  double worst = 1.0;
  const double theta = 0.613;
  for (unsigned n = 2; n <= 3; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    AdditiveCircuit c(dim);
    c.append(RzPlus{dim - 1, Angle(theta)});
    const auto report = synthesize(to_dag(canonicalize(c)));
    std::vector<double> target(dim, 0.0);
    target.back() = theta;
    worst = std::min(worst, fidelity(eval_mult(report.output), testing::diagonal(target)));
  }
  // Parity phase gadget: CX ladder, Rz on the last qubit, ladder undone.
  bool rz_only = true;
  for (unsigned n = 2; n <= 4; ++n) {
    MultCircuit gadget(n);
    for (Qubit q = 0; q + 1 < n; ++q) gadget.append(CX{q, q + 1});
    gadget.append(Rz{n - 1, Angle(theta)});
    for (Qubit q = n - 1; q-- > 0;) gadget.append(CX{q, q + 1});
    const auto canon = canonicalize(translate_circuit(gadget));
    rz_only = rz_only && canon.trailing.is_identity() && !canon.circuit.empty();
    for (const auto& g : canon.circuit.gates()) rz_only = rz_only && std::holds_alternative<RzPlus>(g);
    rz_only = rz_only && eval_additive(canon.circuit).max_abs_diff(eval_mult(gadget)) < 1e-10;
  }
  return {worst >= 1 - 1e-10 && rz_only,
          "min fidelity " + fmt("%.15f", worst) + ", gadgets " + (rz_only ? "RzPlus-only" : "not RzPlus-only")};
}

Outcome ac7_constraints() {
  auto stack = [](std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    StackedVertex s{Angle(0.5), {}};
    for (std::size_t k = 0; k < pairs.size(); ++k) s.members.push_back({k, pairs[k].first, pairs[k].second});
    return s;
  };
  const auto none = check_constraints(stack({{0b00, 0b11}}), PlacementMap(2));
  const auto sparse = check_constraints(stack({{0b000, 0b001}, {0b110, 0b111}}), PlacementMap(3));
  const auto valid = check_constraints(stack({{0b000, 0b001}, {0b010, 0b011}}), PlacementMap(3));
  const bool left = !none.edge_ok && !none.parallel_ok && !none.dense_ok && !none.satisfied();
  const bool middle = sparse.edge_ok && sparse.parallel_ok && !sparse.dense_ok;
  const bool right = valid.edge_ok && valid.parallel_ok && valid.dense_ok && valid.satisfied();
  auto flags = [](const ConstraintReport& r) {
    return std::string(r.edge_ok ? "1" : "0") + (r.parallel_ok ? "1" : "0") + (r.dense_ok ? "1" : "0");
  };
  return {left && middle && right,
          "edge/parallel/dense: " + flags(none) + " " + flags(sparse) + " " + flags(valid)};
}

Outcome ac8_state_visualization() {
  std::mt19937_64 rng(8);
  double worst_amp = 0.0, worst_opacity = 0.0;
  std::size_t segments = 0;
  const std::regex seg(R"re(data-dim="(\d+)" data-step="(\d+)" stroke="#[0-9a-f]{6}" stroke-opacity="([^"]+)")re");
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + testing::pick(rng, 7);
    const auto c = testing::random_additive_circuit(rng, dim, 1 + testing::pick(rng, 12));
    const std::size_t input = testing::pick(rng, dim);
    const auto trace = trace_state(c, input);
    const auto column = eval_additive(c).column(input);
    for (std::size_t k = 0; k < dim; ++k) {
      worst_amp = std::max(worst_amp, std::abs(trace.snapshots.back().amplitudes[k] - column[k]));
    }
    const std::string svg = render_svg(c, input);
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), seg); it != std::sregex_iterator(); ++it) {
      const auto d = std::stoul((*it)[1]), s = std::stoul((*it)[2]);
      const double opacity = std::stod((*it)[3]);
      worst_opacity = std::max(worst_opacity, std::abs(opacity - std::abs(trace.snapshots[s].amplitudes[d])));
      ++segments;
    }
  }
  return {worst_amp < 1e-9 && worst_opacity < 1e-9 && segments > 0,
          "max amplitude diff " + fmt("%.2e", worst_amp) + ", max opacity diff " +
              fmt("%.2e", worst_opacity) + " over " + std::to_string(segments) + " segments"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 round-trip equivalence", ac1_round_trip},
      {"AC2 controlled-rotation recovery", ac2_cry_recovery},
      {"AC3 blow-up reversal", ac3_blowup_reversal},
      {"AC4 identity suite", ac4_identities},
      {"AC5 classical subset", ac5_classical_subset},
      {"AC6 phase synthesis", ac6_phase_synthesis},
      {"AC7 constraint checker", ac7_constraints},
      {"AC8 state visualization", ac8_state_visualization},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
