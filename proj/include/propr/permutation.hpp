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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace propr {

/**
 * A bijection of {0, ..., d-1}; images()[i] is the image of i.
 *
 * Composition convention: compose(a, b)(x) = a(b(x)), i.e. b acts first.
 * Group products of permutations use the same convention.
 */
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);  // throws if not a bijection

  static Permutation identity(std::uint32_t degree);
  /// Builds from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

Permutation perm_compose(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);

}  // namespace propr
