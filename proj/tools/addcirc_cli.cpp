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

// Command-line front end: translate, simplify, synth, verify, matrix, render.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "addcirc/dag.hpp"
#include "addcirc/render.hpp"
#include "addcirc/rewrite.hpp"
#include "addcirc/semantics.hpp"
#include "addcirc/synth.hpp"
#include "addcirc/text_format.hpp"
#include "addcirc/translate.hpp"

namespace {

using namespace addcirc;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

AdditiveCircuit as_additive(const std::variant<AdditiveCircuit, MultCircuit>& c) {
  if (const auto* a = std::get_if<AdditiveCircuit>(&c)) return *a;
  return translate_circuit(std::get<MultCircuit>(c));
}

UnitaryMatrix matrix_of(const std::variant<AdditiveCircuit, MultCircuit>& c) {
  if (const auto* a = std::get_if<AdditiveCircuit>(&c)) return eval_additive(*a);
  return eval_mult(std::get<MultCircuit>(c));
}

std::string format_entry(Complex z) {
  auto clean = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  const double re = clean(z.real()), im = clean(z.imag());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f%c%.6fi", re, im < 0 ? '-' : '+', std::abs(im));
  return buf;
}

std::string format_report(const SynthesisReport& report) {
  std::ostringstream out;
  std::size_t total = 0;
  for (const auto& [kind, n] : report.counts) {
    out << kind << ' ' << n << '\n';
    total += n;
  }
  out << "total " << total << '\n'
      << "stacks " << report.stacks << '\n'
      << "routing_permutations " << report.routing_permutations << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive and multiplicative circuit toolkit"};
  app.require_subcommand(1);

  std::string input, output;
  auto io_options = [&](CLI::App* cmd) {
    cmd->add_option("file", input, "Circuit file (stdin if omitted or '-')");
    cmd->add_option("-o,--output", output, "Output file (stdout by default)");
  };

  auto* translate = app.add_subcommand("translate", "Multiplicative circuit to additive");
  io_options(translate);

  auto* simplify = app.add_subcommand("simplify", "Canonicalize an additive circuit");
  io_options(simplify);

  auto* synth = app.add_subcommand("synth", "Additive circuit to multiplicative gates");
  io_options(synth);
  bool report_flag = false;
  std::string dag_path;
  synth->add_flag("--report", report_flag, "Print gate counts to stderr");
  synth->add_option("--dag", dag_path, "Write the DAG in Graphviz format");

  auto* verify = app.add_subcommand("verify", "Compare two circuits up to global phase");
  std::string first, second, tol_text = "1e-9";
  verify->add_option("first", first, "Circuit file")->required();
  verify->add_option("second", second, "Circuit file")->required();
  verify->add_option("--tol", tol_text, "Fidelity tolerance");

  auto* matrix = app.add_subcommand("matrix", "Print the unitary");
  io_options(matrix);

  auto* render = app.add_subcommand("render", "SVG drawing of an additive circuit");
  io_options(render);
  std::optional<std::size_t> render_input;
  render->add_option("--input", render_input, "Basis index whose amplitudes style the wires");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*translate) {
      const MultCircuit circuit = parse_mult(read_input(input));
      write_output(output, emit_additive(translate_circuit(circuit)));
    } else if (*simplify) {
      const AdditiveCircuit circuit = as_additive(parse_any(read_input(input)));
      write_output(output, emit_additive(from_dag(to_dag(canonicalize(circuit)))));
    } else if (*synth) {
      const AdditiveCircuit circuit = as_additive(parse_any(read_input(input)));
      const AdditiveDag dag = to_dag(canonicalize(circuit));
      if (!dag_path.empty()) write_output(dag_path, to_dot(dag));
      const SynthesisReport report = synthesize(dag);
      if (report_flag) std::cerr << format_report(report);
      write_output(output, emit_mult(report.output));
    } else if (*verify) {
      double tol = 0;
      try {
        tol = parse_angle_literal(tol_text);
      } catch (const std::invalid_argument&) {
        throw UsageError("malformed tolerance '" + tol_text + "'");
      }
      const UnitaryMatrix u = matrix_of(parse_any(read_input(first)));
      const UnitaryMatrix v = matrix_of(parse_any(read_input(second)));
      if (u.dim() != v.dim()) {
        std::cout << "dimension mismatch: " << u.dim() << " vs " << v.dim() << "\nFAIL\n";
        return kExitFail;
      }
      const double f = fidelity(u, v);
      char buf[64];
      std::snprintf(buf, sizeof buf, "fidelity %.15f\n", f);
      std::cout << buf;
      const bool ok = f >= 1.0 - tol;
      std::cout << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : kExitFail;
    } else if (*matrix) {
      const UnitaryMatrix u = matrix_of(parse_any(read_input(input)));
      std::ostringstream out;
      for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < u.dim(); ++c) {
          out << (c ? " " : "") << format_entry(u(r, c));
        }
        out << '\n';
      }
      write_output(output, out.str());
    } else if (*render) {
      const AdditiveCircuit circuit = as_additive(parse_any(read_input(input)));
      write_output(output, render_svg(circuit, render_input));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
