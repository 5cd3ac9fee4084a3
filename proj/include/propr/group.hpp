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

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "propr/element.hpp"

namespace propr {

/// Index of an element inside an enumerated Group. The identity is always 0.
using ElementId = std::uint32_t;

/// Fixed-size bit set over the element ids of one group.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const noexcept;
  std::size_t intersection_count(const Bitset& other) const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;
  std::size_t hash() const noexcept;

  bool operator==(const Bitset&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Default 5,000,000; overridden by the PROPR_MAX_ELEMENTS environment variable.
std::size_t element_cap();

/**
 * A finite group with its complete element set.
 *
 * Elements are discovered breadth-first from the identity by right
 * multiplication with the generators, so ids follow a deterministic order for
 * a fixed generator list. Direct products number their elements
 * componentwise instead. Groups of order at most cayley_limit also carry a
 * full multiplication table; larger groups multiply keys and look the result
 * up in a hash index.
 *
 * Immutable after construction and safe to share between threads.
 */
class Group {
 public:
  static constexpr std::size_t cayley_limit = 2048;

  /// Throws CapExceeded past `cap` elements and propr::Error on empty or
  /// incompatible generators.
  static std::shared_ptr<const Group> enumerate(const std::vector<GroupElement>& generators,
                                                std::size_t cap = element_cap());
  /// With `multiplication_table` false, mul() always multiplies keys.
  static std::shared_ptr<const Group> enumerate(DomainPtr domain,
                                                const std::vector<std::vector<std::uint8_t>>& generator_keys,
                                                std::size_t cap = element_cap(),
                                                bool multiplication_table = true);

  /// The direct product of `factors` over `domain`, whose keys are the
  /// concatenated factor keys. Ids are mixed-radix with the last factor
  /// varying fastest; the generators are those of each factor in turn.
  static std::shared_ptr<const Group> direct_product(std::span<const std::shared_ptr<const Group>> factors,
                                                     DomainPtr domain, std::size_t cap = element_cap());

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  std::size_t order() const noexcept { return count_; }
  const ElementDomain& domain() const noexcept { return *domain_; }
  const DomainPtr& domain_ptr() const noexcept { return domain_; }
  std::span<const ElementId> generators() const noexcept { return generators_; }
  static constexpr ElementId identity() noexcept { return 0; }

  std::span<const std::uint8_t> key(ElementId x) const noexcept {
    return {arena_.data() + std::size_t{x} * width_, width_};
  }
  GroupElement element(ElementId x) const;
  std::optional<ElementId> find(std::span<const std::uint8_t> key) const noexcept;
  std::optional<ElementId> find(const GroupElement& e) const;
  /// Throws propr::Error if `e` is not in the group.
  ElementId index_of(const GroupElement& e) const;

  ElementId mul(ElementId a, ElementId b) const {
    if (!cayley_.empty()) return cayley_[std::size_t{a} * count_ + b];
    return mul_slow(a, b);
  }
  ElementId inv(ElementId a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  ElementId conj(ElementId g, ElementId x) const { return mul(mul(g, x), inverse_[g]); }
  /// a b a^-1 b^-1
  ElementId commutator(ElementId a, ElementId b) const {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }
  ElementId times_generator(ElementId a, std::size_t gen) const noexcept {
    return right_[std::size_t{a} * generators_.size() + gen];
  }
  ElementId power(ElementId x, std::uint64_t e) const;
  std::uint64_t element_order(ElementId x) const;

  /// Canonical-encoding order.
  bool less(ElementId a, ElementId b) const noexcept;
  /// Position of x when all elements are sorted by encoding.
  std::uint32_t encoding_rank(ElementId x) const;

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

 private:
  Group(DomainPtr domain) : domain_(std::move(domain)), width_(domain_->width()) {}

  ElementId mul_slow(ElementId a, ElementId b) const;
  ElementId insert_or_find(const std::uint8_t* key, std::size_t cap);
  void grow_index();
  std::size_t hash_key(const std::uint8_t* key) const noexcept;

  DomainPtr domain_;
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> arena_;
  std::vector<ElementId> index_;  // open addressing, stores id + 1
  std::vector<ElementId> generators_;
  std::vector<ElementId> right_;  // right_[x * ngens + g] = x * generator g
  std::vector<ElementId> inverse_;
  std::vector<std::uint16_t> cayley_;

  mutable std::once_flag rank_once_;
  mutable std::vector<std::uint32_t> rank_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace propr
