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

#include "propr/group.hpp"

namespace propr {

/// A subgroup of an enumerated parent group, held as a member bit set.
class Subgroup {
 public:
  /// `elements` must already be closed under multiplication; `generators`
  /// must generate it. Normality is computed here.
  Subgroup(GroupPtr parent, std::vector<ElementId> elements, std::vector<ElementId> generators);

  const Group& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElementId x) const noexcept { return members_.test(x); }
  std::span<const ElementId> elements() const noexcept { return elements_; }
  std::span<const ElementId> generators() const noexcept { return generators_; }
  const Bitset& members() const noexcept { return members_; }

  /// g m g^-1 lies in the subgroup for every parent generator g and every generator m.
  bool is_normal() const noexcept { return normal_; }
  bool is_subset_of(const Subgroup& other) const noexcept;

  bool operator==(const Subgroup& other) const noexcept;

 private:
  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  Bitset members_;
  bool normal_ = false;
};

/// Incremental subgroup construction (Dimino): adjoining a generator adds
/// whole right cosets of the current subgroup.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(GroupPtr parent);
  explicit SubgroupBuilder(const Subgroup& start);

  /// Returns false if x was already a member.
  bool adjoin(ElementId x);
  bool contains(ElementId x) const noexcept { return members_.test(x); }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const ElementId> generators() const noexcept { return generators_; }
  Subgroup finish() &&;

 private:
  void add_coset(std::size_t base_size, ElementId rep);

  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  Bitset members_;
};

struct ConjugacyClass {
  ElementId representative;  // minimal encoding
  std::vector<ElementId> members;
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;  // ordered by (size, representative encoding)
  std::vector<std::uint32_t> class_of;  // element id -> class index
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

/// Throws propr::Error if a seed id is out of range.
Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementId> seed);
/// Smallest subgroup closed under conjugation containing the seed.
Subgroup normal_closure(const GroupPtr& g, std::span<const ElementId> seed);
/// Smallest subgroup containing a and b. Throws on mismatched parents.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// Normal closure of the commutators of the generators.
Subgroup derived_subgroup(const GroupPtr& g);
/// Generators are picked greedily; `members` must be a subgroup.
Subgroup subgroup_from_members(const GroupPtr& g, const std::vector<ElementId>& members);

ClassPartition conjugacy_classes(const GroupPtr& g);

bool is_abelian(const Group& g);

/// Invariant factors d1 | d2 | ... | dm (ascending), trivial group -> {}.
/// Throws propr::Error if the group is not abelian.
std::vector<std::uint64_t> abelian_invariants(const Group& g);

}  // namespace propr
