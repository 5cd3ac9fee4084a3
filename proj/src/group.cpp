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

#include "propr/group.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>
#include <string_view>

#include "propr/errors.hpp"

namespace propr {

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bitset::intersection_count(const Bitset& other) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t Bitset::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t element_cap() {
  if (const char* env = std::getenv("PROPR_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

std::size_t Group::hash_key(const std::uint8_t* key) const noexcept {
  constexpr std::size_t full = 96;
  if (width_ <= full) {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(key), width_));
  }
  // Wide keys (long permutations): hash the head, the tail and a strided
  // sample. Collisions only cost probes; equality still compares whole keys.
  char sample[64];
  std::memcpy(sample, key, 32);
  std::memcpy(sample + 32, key + width_ - 16, 16);
  const std::size_t stride = (width_ - 48) / 16;
  for (std::size_t i = 0; i < 16; ++i) sample[48 + i] = static_cast<char>(key[32 + i * stride]);
  return std::hash<std::string_view>{}(std::string_view(sample, sizeof sample));
}

std::optional<ElementId> Group::find(std::span<const std::uint8_t> key) const noexcept {
  if (key.size() != width_ || index_.empty()) return std::nullopt;
  const std::size_t mask = index_.size() - 1;
  for (std::size_t slot = hash_key(key.data()) & mask;; slot = (slot + 1) & mask) {
    const ElementId entry = index_[slot];
    if (entry == 0) return std::nullopt;
    if (std::memcmp(arena_.data() + std::size_t{entry - 1} * width_, key.data(), width_) == 0) {
      return entry - 1;
    }
  }
}

void Group::grow_index() {
  std::vector<ElementId> bigger(std::max<std::size_t>(64, index_.size() * 2), 0);
  const std::size_t mask = bigger.size() - 1;
  for (std::size_t id = 0; id < count_; ++id) {
    std::size_t slot = hash_key(arena_.data() + id * width_) & mask;
    while (bigger[slot] != 0) slot = (slot + 1) & mask;
    bigger[slot] = static_cast<ElementId>(id + 1);
  }
  index_ = std::move(bigger);
}

ElementId Group::insert_or_find(const std::uint8_t* key, std::size_t cap) {
  if (auto found = find({key, width_})) return *found;
  if (count_ >= cap) {
    throw CapExceeded("group exceeds the element cap of " + std::to_string(cap) +
                      " (raise it with PROPR_MAX_ELEMENTS)");
  }
  if ((count_ + 1) * 2 > index_.size()) grow_index();
  arena_.insert(arena_.end(), key, key + width_);
  const auto id = static_cast<ElementId>(count_++);
  const std::size_t mask = index_.size() - 1;
  std::size_t slot = hash_key(key) & mask;
  while (index_[slot] != 0) slot = (slot + 1) & mask;
  index_[slot] = id + 1;
  return id;
}

std::shared_ptr<const Group> Group::enumerate(const std::vector<GroupElement>& generators,
                                              std::size_t cap) {
  if (generators.empty()) throw Error("a group needs at least one generator");
  const DomainPtr& domain = generators.front().domain_ptr();
  std::vector<std::vector<std::uint8_t>> keys;
  for (const auto& g : generators) {
    if (!g.domain().same_as(*domain)) throw Error("generators belong to incompatible domains");
    keys.emplace_back(g.key().begin(), g.key().end());
  }
  return enumerate(domain, keys, cap);
}

std::shared_ptr<const Group> Group::enumerate(DomainPtr domain,
                                              const std::vector<std::vector<std::uint8_t>>& generator_keys,
                                              std::size_t cap, bool multiplication_table) {
  if (generator_keys.empty()) throw Error("a group needs at least one generator");
  std::shared_ptr<Group> g(new Group(std::move(domain)));
  const std::size_t w = g->width_;
  for (const auto& k : generator_keys) {
    if (k.size() != w) throw Error("generator key has the wrong width");
  }
  const std::size_t ngens = generator_keys.size();

  std::vector<std::uint8_t> buf(w);
  g->domain_->identity(buf.data());
  g->insert_or_find(buf.data(), std::max<std::size_t>(cap, 1));

  std::vector<ElementId> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::uint8_t> current(w);
  for (std::size_t x = 0; x < g->count_; ++x) {
    std::memcpy(current.data(), g->arena_.data() + x * w, w);
    for (std::size_t gen = 0; gen < ngens; ++gen) {
      g->domain_->multiply(current.data(), generator_keys[gen].data(), buf.data());
      const std::size_t before = g->count_;
      const ElementId y = g->insert_or_find(buf.data(), cap);
      if (g->count_ != before) {
        parent.push_back(static_cast<ElementId>(x));
        via.push_back(static_cast<std::uint32_t>(gen));
      }
      g->right_.push_back(y);
    }
  }
  for (std::size_t gen = 0; gen < ngens; ++gen) g->generators_.push_back(g->right_[gen]);

  const std::size_t n = g->count_;
  if (multiplication_table && n <= cayley_limit) {
    // left[s * n + y] = generator s times y, along the BFS tree y = parent(y) * generator.
    std::vector<std::uint16_t> left(ngens * n);
    for (std::size_t s = 0; s < ngens; ++s) {
      std::uint16_t* l = left.data() + s * n;
      l[0] = static_cast<std::uint16_t>(g->generators_[s]);
      for (std::size_t y = 1; y < n; ++y) {
        l[y] = static_cast<std::uint16_t>(g->right_[std::size_t{l[parent[y]]} * ngens + via[y]]);
      }
    }
    // x = parent(x) * s, so x * y = parent(x) * (s * y).
    g->cayley_.resize(n * n);
    for (std::size_t y = 0; y < n; ++y) g->cayley_[y] = static_cast<std::uint16_t>(y);
    for (std::size_t x = 1; x < n; ++x) {
      const std::uint16_t* from = g->cayley_.data() + std::size_t{parent[x]} * n;
      const std::uint16_t* l = left.data() + std::size_t{via[x]} * n;
      std::uint16_t* row = g->cayley_.data() + x * n;
      for (std::size_t y = 0; y < n; ++y) row[y] = from[l[y]];
    }
  }
  g->inverse_.resize(n);
  auto invert_key = [&](std::size_t x) {
    g->domain_->invert(g->arena_.data() + x * w, buf.data());
    const auto y = g->find({buf.data(), w});
    if (!y) throw InvariantViolation("element set is not closed under inverses");
    return *y;
  };
  if (g->cayley_.empty()) {
    for (std::size_t x = 0; x < n; ++x) g->inverse_[x] = invert_key(x);
  } else {
    // x = parent(x) * s, so x^-1 = s^-1 * parent(x)^-1.
    std::vector<ElementId> gen_inverse(ngens);
    for (std::size_t s = 0; s < ngens; ++s) gen_inverse[s] = invert_key(g->generators_[s]);
    g->inverse_[0] = 0;
    for (std::size_t x = 1; x < n; ++x) {
      g->inverse_[x] = g->cayley_[std::size_t{gen_inverse[via[x]]} * n + g->inverse_[parent[x]]];
    }
  }
  return g;
}

std::shared_ptr<const Group> Group::direct_product(std::span<const std::shared_ptr<const Group>> factors,
                                                   DomainPtr domain, std::size_t cap) {
  if (factors.empty()) throw Error("a direct product needs at least one factor");
  std::size_t n = 1;
  std::size_t width = 0;
  for (const auto& f : factors) {
    if (f->order() > cap / n) {
      throw CapExceeded("group exceeds the element cap of " + std::to_string(cap) +
                        " (raise it with PROPR_MAX_ELEMENTS)");
    }
    n *= f->order();
    width += f->width_;
  }
  if (domain->width() != width) throw Error("direct product domain has the wrong width");
  std::shared_ptr<Group> g(new Group(std::move(domain)));
  const std::size_t k = factors.size();

  // stride[i] = product of the orders of the factors after i.
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i]->order();
  auto component = [&](std::size_t x, std::size_t i) {
    return static_cast<ElementId>(x / stride[i] % factors[i]->order());
  };

  g->arena_.resize(n * width);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint8_t* out = g->arena_.data() + x * width;
    for (std::size_t i = 0; i < k; ++i) {
      auto part = factors[i]->key(component(x, i));
      std::memcpy(out, part.data(), part.size());
      out += part.size();
    }
  }
  g->count_ = n;
  std::size_t slots = 64;
  while (slots < 2 * n) slots *= 2;
  g->index_.assign(slots, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t slot = g->hash_key(g->arena_.data() + x * width) & (slots - 1);
    while (g->index_[slot] != 0) slot = (slot + 1) & (slots - 1);
    g->index_[slot] = static_cast<ElementId>(x + 1);
  }

  std::vector<std::pair<std::size_t, std::size_t>> gens;  // (factor, generator index)
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = 0; s < factors[i]->generators_.size(); ++s) {
      gens.emplace_back(i, s);
      g->generators_.push_back(static_cast<ElementId>(factors[i]->generators_[s] * stride[i]));
    }
  }
  g->right_.resize(n * gens.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto [i, t] = gens[s];
      const ElementId c = component(x, i);
      g->right_[x * gens.size() + s] =
          static_cast<ElementId>(x + (std::size_t{factors[i]->times_generator(c, t)} - c) * stride[i]);
    }
  }
  g->inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < k; ++i) y += std::size_t{factors[i]->inv(component(x, i))} * stride[i];
    g->inverse_[x] = static_cast<ElementId>(y);
  }
  if (n <= cayley_limit) {
    // Fold from the last factor: (a, r)(b, s) = (ab, rs) with id a * |R| + r.
    std::vector<std::uint16_t> table{0};
    std::size_t m = 1;
    for (std::size_t i = k; i-- > 0;) {
      const Group& f = *factors[i];
      const std::size_t fn = f.order();
      const std::size_t wide = fn * m;
      std::vector<std::uint16_t> next(wide * wide);
      for (std::size_t a = 0; a < fn; ++a) {
        for (std::size_t r = 0; r < m; ++r) {
          std::uint16_t* row = next.data() + (a * m + r) * wide;
          const std::uint16_t* rest = table.data() + r * m;
          for (std::size_t b = 0; b < fn; ++b) {
            const std::size_t base = std::size_t{f.mul(static_cast<ElementId>(a), static_cast<ElementId>(b))} * m;
            for (std::size_t t = 0; t < m; ++t) row[b * m + t] = static_cast<std::uint16_t>(base + rest[t]);
          }
        }
      }
      table = std::move(next);
      m = wide;
    }
    g->cayley_ = std::move(table);
  }
  return g;
}

GroupElement Group::element(ElementId x) const {
  auto k = key(x);
  return GroupElement(domain_, std::vector<std::uint8_t>(k.begin(), k.end()));
}

std::optional<ElementId> Group::find(const GroupElement& e) const {
  if (!e.domain().same_as(*domain_)) return std::nullopt;
  return find(e.key());
}

ElementId Group::index_of(const GroupElement& e) const {
  if (auto id = find(e)) return *id;
  throw Error("element " + e.to_string() + " is not in the group");
}

ElementId Group::mul_slow(ElementId a, ElementId b) const {
  // Not thread_local: coset domains re-enter mul_slow on their parent group.
  std::array<std::uint8_t, 256> small;
  std::vector<std::uint8_t> large;
  std::uint8_t* buf = small.data();
  if (width_ > small.size()) {
    large.resize(width_);
    buf = large.data();
  }
  domain_->multiply(arena_.data() + std::size_t{a} * width_, arena_.data() + std::size_t{b} * width_, buf);
  auto y = find({buf, width_});
  if (!y) throw InvariantViolation("product escaped the enumerated element set");
  return *y;
}

ElementId Group::power(ElementId x, std::uint64_t e) const {
  ElementId result = identity();
  ElementId base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(ElementId x) const {
  std::uint64_t n = 1;
  for (ElementId y = x; y != identity(); y = mul(y, x)) ++n;
  return n;
}

bool Group::less(ElementId a, ElementId b) const noexcept {
  return std::memcmp(arena_.data() + std::size_t{a} * width_, arena_.data() + std::size_t{b} * width_,
                     width_) < 0;
}

std::uint32_t Group::encoding_rank(ElementId x) const {
  std::call_once(rank_once_, [this] {
    std::vector<ElementId> ids(count_);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [this](ElementId a, ElementId b) { return less(a, b); });
    rank_.resize(count_);
    for (std::size_t i = 0; i < ids.size(); ++i) rank_[ids[i]] = static_cast<std::uint32_t>(i);
  });
  return rank_[x];
}

}  // namespace propr
