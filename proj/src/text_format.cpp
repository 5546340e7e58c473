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

#include "addcirc/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (text.empty()) break;
  }
  return lines;
}

unsigned long parse_index(const Line& line, const std::string& token) {
  unsigned long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

Angle parse_angle_token(const Line& line, const std::string& token) {
  try {
    return Angle(parse_angle_literal(token));
  } catch (const std::invalid_argument&) {
    throw ParseError(line.number, "malformed angle '" + token + "'");
  }
}

std::vector<Qubit> parse_qubit_list(const Line& line, const std::string& token) {
  std::vector<Qubit> out;
  if (token == "-") return out;
  std::size_t start = 0;
  while (start <= token.size()) {
    const auto comma = token.find(',', start);
    const std::string part = token.substr(start, comma - start);
    out.push_back(static_cast<Qubit>(parse_index(line, part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void expect_args(const Line& line, std::size_t count) {
  if (line.tokens.size() != count + 1) {
    throw ParseError(
        line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count) + " argument(s)");
  }
}

std::string qubit_list(const std::vector<Qubit>& qubits) {
  if (qubits.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(qubits[k]);
  }
  return out;
}

// Header line shared by both formats.
std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ParseError(1, "missing '" + keyword + "' header");
  const Line& head = lines.front();
  if (head.tokens[0] != keyword) {
    throw ParseError(head.number, "expected '" + keyword + "' header");
  }
  expect_args(head, 1);
  return parse_index(head, head.tokens[1]);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

double parse_angle_literal(std::string_view text) {
  std::string s;
  for (char c : trim(text)) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  for (auto at = s.find("\u03c0"); at != std::string::npos; at = s.find("\u03c0")) {
    s.replace(at, std::string("\u03c0").size(), "pi");
  }
  const auto error = [&] { return std::invalid_argument("malformed angle '" + s + "'"); };
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    const auto v = parse_number(s);
    if (!v) throw error();
    return *v;
  }
  // [coef['*']] pi ['/' denom]
  std::string coef = s.substr(0, pi_at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    const auto v = parse_number(coef);
    if (!v) throw error();
    factor = *v;
  }
  const std::string rest = s.substr(pi_at + 2);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw error();
    const auto v = parse_number(rest.substr(1));
    if (!v || *v == 0.0) throw error();
    denom = *v;
  }
  return factor * kPi / denom;
}

std::string format_angle(double radians) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", radians);
  return buf;
}

AdditiveCircuit parse_additive(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t dim = parse_header(lines, "dims");
  if (dim == 0) throw ParseError(lines.front().number, "dimension must be positive");
  AdditiveCircuit circuit(dim);
  auto index = [&](const Line& line, const std::string& tok) {
    const auto i = parse_index(line, tok);
    if (i >= dim) throw ParseError(line.number, "index " + tok + " out of range");
    return static_cast<std::size_t>(i);
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& op = line.tokens[0];
    try {
      if (op == "ry") {
        expect_args(line, 3);
        circuit.append(RyPlus{
            index(line, line.tokens[1]), index(line, line.tokens[2]),
            parse_angle_token(line, line.tokens[3])});
      } else if (op == "rz") {
        expect_args(line, 2);
        circuit.append(
            RzPlus{index(line, line.tokens[1]), parse_angle_token(line, line.tokens[2])});
      } else if (op == "swap") {
        expect_args(line, 2);
        circuit.append(XPlus{index(line, line.tokens[1]), index(line, line.tokens[2])});
      } else if (op == "phase") {
        expect_args(line, 1);
        circuit.add_global_phase(parse_angle_token(line, line.tokens[1]));
      } else {
        throw ParseError(line.number, "unknown gate '" + op + "'");
      }
    } catch (const CircuitInvalidity& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return circuit;
}

std::string emit_additive(const AdditiveCircuit& circuit) {
  std::ostringstream out;
  out << "dims " << circuit.dim() << '\n';
  if (circuit.global_phase().radians() != 0.0) {
    out << "phase " << format_angle(circuit.global_phase().radians()) << '\n';
  }
  for (const auto& g : circuit.gates()) {
    std::visit(
        detail::overloaded{
            [&](const RyPlus& x) {
              out << "ry " << x.first << ' ' << x.second << ' '
                  << format_angle(x.angle.radians()) << '\n';
            },
            [&](const RzPlus& x) {
              out << "rz " << x.dim << ' ' << format_angle(x.angle.radians()) << '\n';
            },
            [&](const XPlus& x) { out << "swap " << x.first << ' ' << x.second << '\n'; }},
        g);
  }
  return out.str();
}

MultCircuit parse_mult(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = parse_header(lines, "qubits");
  if (n == 0 || n > kMaxQubits) {
    throw ParseError(lines.front().number, "qubit count must be between 1 and " +
                                               std::to_string(kMaxQubits));
  }
  MultCircuit circuit(static_cast<unsigned>(n));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& op = line.tokens[0];
    const auto& t = line.tokens;
    auto q = [&](std::size_t i) { return static_cast<Qubit>(parse_index(line, t[i])); };
    try {
      if (op == "ry" || op == "rz") {
        expect_args(line, 2);
        const Angle a = parse_angle_token(line, t[2]);
        if (op == "ry") {
          circuit.append(Ry{q(1), a});
        } else {
          circuit.append(Rz{q(1), a});
        }
      } else if (op == "x") {
        expect_args(line, 1);
        circuit.append(X{q(1)});
      } else if (op == "cx") {
        expect_args(line, 2);
        circuit.append(CX{q(1), q(2)});
      } else if (op == "mcx") {
        expect_args(line, 2);
        circuit.append(MCX{parse_qubit_list(line, t[1]), q(2)});
      } else if (op == "mcry") {
        expect_args(line, 3);
        circuit.append(MCRy{parse_qubit_list(line, t[1]), q(2), parse_angle_token(line, t[3])});
      } else if (op == "cphase") {
        expect_args(line, 2);
        circuit.append(CPhase{parse_qubit_list(line, t[1]), parse_angle_token(line, t[2])});
      } else if (op == "phase") {
        expect_args(line, 1);
        circuit.add_global_phase(parse_angle_token(line, t[1]));
      } else {
        throw ParseError(line.number, "unknown gate '" + op + "'");
      }
    } catch (const CircuitInvalidity& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return circuit;
}

std::string emit_mult(const MultCircuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n_qubits() << '\n';
  if (circuit.global_phase().radians() != 0.0) {
    out << "phase " << format_angle(circuit.global_phase().radians()) << '\n';
  }
  for (const auto& g : circuit.gates()) {
    std::visit(
        detail::overloaded{
            [&](const Ry& x) {
              out << "ry " << x.qubit << ' ' << format_angle(x.angle.radians()) << '\n';
            },
            [&](const Rz& x) {
              out << "rz " << x.qubit << ' ' << format_angle(x.angle.radians()) << '\n';
            },
            [&](const X& x) { out << "x " << x.qubit << '\n'; },
            [&](const CX& x) { out << "cx " << x.control << ' ' << x.target << '\n'; },
            [&](const MCX& x) { out << "mcx " << qubit_list(x.controls) << ' ' << x.target << '\n'; },
            [&](const MCRy& x) {
              out << "mcry " << qubit_list(x.controls) << ' ' << x.target << ' '
                  << format_angle(x.angle.radians()) << '\n';
            },
            [&](const CPhase& x) {
              out << "cphase " << qubit_list(x.controls) << ' ' << format_angle(x.angle.radians())
                  << '\n';
            }},
        g);
  }
  return out.str();
}

std::variant<AdditiveCircuit, MultCircuit> parse_any(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty circuit file");
  const std::string& head = lines.front().tokens[0];
  if (head == "dims") return parse_additive(text);
  if (head == "qubits") return parse_mult(text);
  throw ParseError(lines.front().number, "expected 'dims' or 'qubits' header");
}

}  // namespace addcirc
