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

#include "addcirc/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace addcirc {

Permutation::Permutation(std::size_t size) : image_(size) {
  std::iota(image_.begin(), image_.end(), std::size_t{0});
}

Permutation Permutation::from_image(std::vector<std::size_t> image) {
  std::vector<bool> hit(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || hit[v]) {
      throw std::invalid_argument("permutation image is not a bijection");
    }
    hit[v] = true;
  }
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::transposition(
    std::size_t size, std::size_t a, std::size_t b) {
  if (a >= size || b >= size) {
    throw std::invalid_argument("transposition index out of range");
  }
  Permutation p(size);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  Permutation p(size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[i] = next(image_[i]);
  return p;
}

void Permutation::then_transpose(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) {
    throw std::invalid_argument("transposition index out of range");
  }
  for (auto& v : image_) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Permutation::transpositions()
    const {
  // content[p]: which original dimension currently sits at p.
  const std::size_t n = size();
  std::vector<std::size_t> content(n), where(n);
  std::iota(content.begin(), content.end(), std::size_t{0});
  std::iota(where.begin(), where.end(), std::size_t{0});
  const Permutation inv = inverse();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t wanted = inv(p);
    if (content[p] == wanted) continue;
    const std::size_t q = where[wanted];
    out.emplace_back(p, q);
    std::swap(content[p], content[q]);
    where[content[p]] = p;
    where[content[q]] = q;
  }
  return out;
}

}  // namespace addcirc
