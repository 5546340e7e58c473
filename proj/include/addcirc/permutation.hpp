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
#include <utility>
#include <vector>

namespace addcirc {

/**
 * A bijection σ on {0, ..., N-1}.
 *
 * Its matrix S sends basis vector e_i to e_{σ(i)}, so applying S moves the
 * amplitude of dimension i to dimension σ(i).
 */
class Permutation {
 public:
  explicit Permutation(std::size_t size = 0);  // identity
  /// @throws std::invalid_argument unless `image` is a bijection.
  static Permutation from_image(std::vector<std::size_t> image);
  static Permutation transposition(std::size_t size, std::size_t a, std::size_t b);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const { return image_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// The permutation "this, then `next`": i ↦ next(this(i)).
  Permutation then(const Permutation& next) const;

  /// Postcomposes with the transposition (a b): afterwards the preimages of
  /// a and b are exchanged.
  void then_transpose(std::size_t a, std::size_t b);

  /**
   * Transpositions (a, b) whose matrices, applied in list order, multiply
   * to this permutation's matrix. At most N-1 entries.
   */
  std::vector<std::pair<std::size_t, std::size_t>> transpositions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace addcirc
