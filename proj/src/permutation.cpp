/*
 * Copyright 2026 The propr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "propr/permutation.hpp"

#include "propr/errors.hpp"

namespace propr {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t from = cycle[i];
      if (from >= degree) throw Error("cycle point out of range");
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("permutation degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) images[x] = a(b(x));
  return Permutation(std::move(images));
}

Permutation perm_inverse(const Permutation& a) {
  std::vector<std::uint32_t> images(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) images[a(x)] = x;
  return Permutation(std::move(images));
}

}  // namespace propr
