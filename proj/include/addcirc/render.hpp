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

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "addcirc/additive.hpp"
#include "addcirc/semantics.hpp"

namespace addcirc {

/// Stroke style of a wire segment carrying amplitude a.
struct WireStyle {
  double opacity;  // |a|, clamped to [0, 1]
  double hue;      // arg(a) mod 2π, scaled to [0, 1)

  static WireStyle from_amplitude(Complex amplitude);
  /// "#rrggbb": black at phase 0, brightest at phase π, hue = position on
  /// the color wheel.
  std::string color() const;
};

/**
 * SVG 1.1 drawing of an additive circuit, one horizontal wire per
 * dimension. RyPlus is a box over two adjacent rows (wires cross to make
 * them adjacent), RzPlus a labelled circle, XPlus a crossing.
 *
 * With an input basis index every wire segment is styled by the amplitude
 * it carries, and tagged with data-dim / data-step attributes.
 *
 * @throws std::invalid_argument if the basis index is out of range.
 */
std::string render_svg(
    const AdditiveCircuit& circuit,
    std::optional<std::size_t> input = std::nullopt);

}  // namespace addcirc
