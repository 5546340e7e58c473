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

#include "addcirc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

namespace {

constexpr double kMargin = 40.0;
constexpr double kRowGap = 40.0;
constexpr double kColumn = 60.0;

std::string fmt(const char* format, double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

class Drawing {
 public:
  Drawing(std::size_t dim, const StateTrace* trace) : trace_(trace), pos_(dim), order_(dim) {
    for (std::size_t d = 0; d < dim; ++d) pos_[d] = order_[d] = d;
  }

  double y(std::size_t row) const { return kMargin + static_cast<double>(row) * kRowGap; }
  double x() const { return x_; }
  std::size_t pos(std::size_t dim) const { return pos_[dim]; }
  std::string body() const { return body_.str(); }

  void segment(std::size_t dim, std::size_t step, double x0, double y0, double x1, double y1) {
    body_ << "<line x1=\"" << fmt("%g", x0) << "\" y1=\"" << fmt("%g", y0) << "\" x2=\""
          << fmt("%g", x1) << "\" y2=\"" << fmt("%g", y1) << "\" data-dim=\"" << dim
          << "\" data-step=\"" << step << '"';
    if (trace_ != nullptr) {
      const WireStyle style = WireStyle::from_amplitude(trace_->snapshots[step].amplitudes[dim]);
      body_ << " stroke=\"" << style.color() << "\" stroke-opacity=\""
            << fmt("%.12g", style.opacity) << '"';
    } else {
      body_ << " stroke=\"#000000\"";
    }
    body_ << " stroke-width=\"2\"/>\n";
  }

  // Straight wires for every dimension except `skip`.
  void straight_column(std::size_t step, const std::vector<std::size_t>& skip = {}) {
    for (std::size_t d = 0; d < pos_.size(); ++d) {
      if (std::find(skip.begin(), skip.end(), d) != skip.end()) continue;
      segment(d, step, x_, y(pos_[d]), x_ + kColumn, y(pos_[d]));
    }
  }

  // Moves dimension `mover` to the row just below `anchor`, drawing crossings.
  void bring_adjacent(std::size_t anchor, std::size_t mover, std::size_t step) {
    std::vector<std::size_t> order = order_;
    order.erase(order.begin() + static_cast<std::ptrdiff_t>(pos_[mover]));
    const auto at = std::find(order.begin(), order.end(), anchor);
    order.insert(at + 1, mover);
    std::vector<std::size_t> next(pos_.size());
    for (std::size_t p = 0; p < order.size(); ++p) next[order[p]] = p;
    for (std::size_t d = 0; d < pos_.size(); ++d) {
      segment(d, step, x_, y(pos_[d]), x_ + kColumn, y(next[d]));
    }
    order_ = std::move(order);
    pos_ = std::move(next);
    x_ += kColumn;
  }

  void advance() { x_ += kColumn; }

  std::ostringstream& raw() { return body_; }

 private:
  const StateTrace* trace_;
  std::vector<std::size_t> pos_;    // dimension -> row
  std::vector<std::size_t> order_;  // row -> dimension
  double x_ = kMargin;
  std::ostringstream body_;
};

}  // namespace

WireStyle WireStyle::from_amplitude(Complex amplitude) {
  const double magnitude = std::min(1.0, std::abs(amplitude));
  double phase = magnitude == 0.0 ? 0.0 : std::arg(amplitude);
  if (phase < 0) phase += 2 * kPi;
  double hue = phase / (2 * kPi);
  if (hue >= 1.0) hue = 0.0;
  return WireStyle{magnitude, hue};
}

std::string WireStyle::color() const {
  // HSV with full saturation; value follows (1 - cos φ) / 2.
  const double phase = hue * 2 * kPi;
  const double value = (1.0 - std::cos(phase)) / 2.0;
  const double h6 = hue * 6.0;
  const int sector = static_cast<int>(std::floor(h6)) % 6;
  const double f = h6 - std::floor(h6);
  const double p = 0.0, q = value * (1 - f), t = value * f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = value; g = t; b = p; break;
    case 1: r = q; g = value; b = p; break;
    case 2: r = p; g = value; b = t; break;
    case 3: r = p; g = q; b = value; break;
    case 4: r = t; g = p; b = value; break;
    default: r = value; g = p; b = q; break;
  }
  auto byte = [](double c) { return static_cast<int>(std::lround(std::clamp(c, 0.0, 1.0) * 255)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(r), byte(g), byte(b));
  return buf;
}

std::string render_svg(const AdditiveCircuit& circuit, std::optional<std::size_t> input) {
  const std::size_t dim = circuit.dim();
  std::optional<StateTrace> trace;
  if (input) {
    if (*input >= dim) throw std::invalid_argument("input basis index out of range");
    trace = trace_state(circuit, *input);
  }
  Drawing draw(dim, trace ? &*trace : nullptr);

  for (std::size_t d = 0; d < dim; ++d) {
    draw.raw() << "<text x=\"" << fmt("%g", kMargin - 8) << "\" y=\"" << fmt("%g", draw.y(d) + 4)
               << "\" text-anchor=\"end\">" << d << "</text>\n";
  }

  const auto& gates = circuit.gates();
  for (std::size_t step = 0; step < gates.size(); ++step) {
    std::visit(
        detail::overloaded{
            [&](const RyPlus& g) {
              const auto a = draw.pos(g.first), b = draw.pos(g.second);
              if ((a > b ? a - b : b - a) > 1) draw.bring_adjacent(g.first, g.second, step);
              draw.straight_column(step);
              const double top = draw.y(std::min(draw.pos(g.first), draw.pos(g.second)));
              draw.raw() << "<rect x=\"" << fmt("%g", draw.x() + 10) << "\" y=\""
                         << fmt("%g", top - 12) << "\" width=\"" << fmt("%g", kColumn - 20)
                         << "\" height=\"" << fmt("%g", kRowGap + 24)
                         << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
              draw.raw() << "<text x=\"" << fmt("%g", draw.x() + kColumn / 2) << "\" y=\""
                         << fmt("%g", draw.y(draw.pos(g.first)) + 4)
                         << "\" text-anchor=\"middle\" font-size=\"10\">Ry "
                         << fmt("%.4g", g.angle.radians()) << "</text>\n";
              draw.advance();
            },
            [&](const RzPlus& g) {
              draw.straight_column(step);
              const double cy = draw.y(draw.pos(g.dim));
              draw.raw() << "<circle cx=\"" << fmt("%g", draw.x() + kColumn / 2) << "\" cy=\""
                         << fmt("%g", cy) << "\" r=\"14\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
              draw.raw() << "<text x=\"" << fmt("%g", draw.x() + kColumn / 2) << "\" y=\""
                         << fmt("%g", cy + 3) << "\" text-anchor=\"middle\" font-size=\"9\">"
                         << fmt("%.3g", g.angle.radians()) << "</text>\n";
              draw.advance();
            },
            [&](const XPlus& g) {
              draw.straight_column(step, {g.first, g.second});
              const double ya = draw.y(draw.pos(g.first)), yb = draw.y(draw.pos(g.second));
              draw.segment(g.first, step, draw.x(), ya, draw.x() + kColumn, yb);
              draw.segment(g.second, step, draw.x(), yb, draw.x() + kColumn, ya);
              draw.advance();
            }},
        gates[step]);
  }
  draw.straight_column(gates.size());
  draw.advance();

  const double width = draw.x() + kMargin;
  const double height = draw.y(dim - 1) + kMargin;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt("%g", width)
      << "\" height=\"" << fmt("%g", height) << "\" viewBox=\"0 0 " << fmt("%g", width) << ' '
      << fmt("%g", height) << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << draw.body() << "</svg>\n";
  return svg.str();
}

}  // namespace addcirc
