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

#include "propr/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "propr/errors.hpp"

namespace propr {

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> elements, std::vector<ElementId> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)),
      members_(parent_->order()) {
  for (ElementId x : elements_) members_.set(x);
  normal_ = true;
  for (ElementId g : parent_->generators()) {
    for (ElementId m : generators_) {
      if (!members_.test(parent_->conj(g, m))) {
        normal_ = false;
        return;
      }
    }
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  return parent_ == other.parent_ && order() <= other.order() && members_.is_subset_of(other.members_);
}

bool Subgroup::operator==(const Subgroup& other) const noexcept {
  return parent_ == other.parent_ && order() == other.order() && members_ == other.members_;
}

SubgroupBuilder::SubgroupBuilder(GroupPtr parent)
    : parent_(std::move(parent)), elements_{Group::identity()}, members_(parent_->order()) {
  members_.set(Group::identity());
}

SubgroupBuilder::SubgroupBuilder(const Subgroup& start)
    : parent_(start.parent_ptr()),
      elements_(start.elements().begin(), start.elements().end()),
      generators_(start.generators().begin(), start.generators().end()),
      members_(start.members()) {}

void SubgroupBuilder::add_coset(std::size_t base_size, ElementId rep) {
  for (std::size_t t = 0; t < base_size; ++t) {
    const ElementId y = parent_->mul(elements_[t], rep);
    members_.set(y);
    elements_.push_back(y);
  }
}

bool SubgroupBuilder::adjoin(ElementId x) {
  if (x >= parent_->order()) throw Error("element id out of range");
  if (members_.test(x)) return false;
  const std::size_t base = elements_.size();
  generators_.push_back(x);
  add_coset(base, x);
  std::vector<ElementId> reps{x};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
      const ElementId y = parent_->mul(reps[r], generators_[gi]);
      if (!members_.test(y)) {
        add_coset(base, y);
        reps.push_back(y);
      }
    }
  }
  return true;
}

Subgroup SubgroupBuilder::finish() && {
  return Subgroup(std::move(parent_), std::move(elements_), std::move(generators_));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {Group::identity()}, {}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<ElementId> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<ElementId> gens;
  for (ElementId x : g->generators()) {
    if (x != Group::identity()) gens.push_back(x);
  }
  return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementId> seed) {
  SubgroupBuilder b(g);
  for (ElementId x : seed) b.adjoin(x);
  return std::move(b).finish();
}

Subgroup normal_closure(const GroupPtr& g, std::span<const ElementId> seed) {
  SubgroupBuilder b(g);
  for (ElementId x : seed) b.adjoin(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId gen : g->generators()) {
      // generators() of the builder may grow while we scan it
      for (std::size_t i = 0; i < b.generators().size(); ++i) {
        if (b.adjoin(g->conj(gen, b.generators()[i]))) changed = true;
      }
    }
  }
  return std::move(b).finish();
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw Error("join of subgroups of different groups");
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  SubgroupBuilder builder(a.order() >= b.order() ? a : b);
  const Subgroup& other = a.order() >= b.order() ? b : a;
  for (ElementId x : other.generators()) builder.adjoin(x);
  return std::move(builder).finish();
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<ElementId> seed;
  const auto gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seed.push_back(g->commutator(gens[i], gens[j]));
  }
  return normal_closure(g, seed);
}

Subgroup subgroup_from_members(const GroupPtr& g, const std::vector<ElementId>& members) {
  SubgroupBuilder b(g);
  for (ElementId x : members) b.adjoin(x);
  if (b.order() != members.size()) throw InvariantViolation("member set is not a subgroup");
  return std::move(b).finish();
}

ClassPartition conjugacy_classes(const GroupPtr& g) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  const std::size_t n = g->order();
  std::vector<std::uint32_t> raw_class(n, unset);
  std::vector<ConjugacyClass> classes;
  for (ElementId x = 0; x < n; ++x) {
    if (raw_class[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(classes.size());
    ConjugacyClass c{x, {x}};
    raw_class[x] = id;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (ElementId gen : g->generators()) {
        const ElementId y = g->conj(gen, c.members[i]);
        if (raw_class[y] == unset) {
          raw_class[y] = id;
          c.members.push_back(y);
        }
      }
    }
    for (ElementId y : c.members) {
      if (g->less(y, c.representative)) c.representative = y;
    }
    classes.push_back(std::move(c));
  }

  std::vector<std::uint32_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (classes[a].members.size() != classes[b].members.size()) {
      return classes[a].members.size() < classes[b].members.size();
    }
    return g->less(classes[a].representative, classes[b].representative);
  });
  ClassPartition out;
  out.class_of.resize(n);
  std::vector<std::uint32_t> renumber(classes.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;
  for (std::size_t x = 0; x < n; ++x) out.class_of[x] = renumber[raw_class[x]];
  for (std::uint32_t idx : order) out.classes.push_back(std::move(classes[idx]));
  return out;
}

bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> abelian_invariants(const Group& g) {
  if (!is_abelian(g)) throw Error("abelian invariants requested for a nonabelian group");
  const std::size_t n = g.order();
  // Walking <x> once gives every power its order ord(x) / gcd(k, ord(x)).
  std::vector<std::uint64_t> orders(n, 0);
  std::vector<ElementId> powers;
  for (ElementId x = 0; x < n; ++x) {
    if (orders[x] != 0) continue;
    powers.assign(1, g.identity());
    for (ElementId y = x; y != g.identity(); y = g.mul(y, x)) powers.push_back(y);
    const std::uint64_t m = powers.size();
    for (std::uint64_t k = 0; k < m; ++k) orders[powers[k]] = m / std::gcd(k, m);
  }

  // For each prime p, parts[p] is the partition of the Sylow p-subgroup's exponents.
  std::map<std::uint64_t, std::vector<std::uint32_t>> parts;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // counts[i] = #{x : p-part of ord(x) divides p^i}
    std::vector<std::uint64_t> counts(e + 1, 0);
    for (std::uint64_t o : orders) {
      std::uint32_t v = 0;
      while (o % p == 0) {
        o /= p;
        ++v;
      }
      for (std::uint32_t i = v; i <= e; ++i) ++counts[i];
    }
    // at_least[i] = number of cyclic factors of exponent >= i
    std::vector<std::uint32_t> at_least(e + 2, 0);
    for (std::uint32_t i = 1; i <= e; ++i) {
      std::uint64_t ratio = counts[i] / counts[i - 1];
      std::uint32_t r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least[i] = r;
    }
    std::vector<std::uint32_t>& lambda = parts[p];
    for (std::uint32_t i = e; i >= 1; --i) {
      for (std::uint32_t c = at_least[i + 1]; c < at_least[i]; ++c) lambda.push_back(i);
    }
  }

  std::size_t m = 0;
  for (const auto& [p, lambda] : parts) m = std::max(m, lambda.size());
  std::vector<std::uint64_t> factors(m, 1);  // largest first
  for (const auto& [p, lambda] : parts) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      for (std::uint32_t t = 0; t < lambda[j]; ++t) factors[j] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace propr
