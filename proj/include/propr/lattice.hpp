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
#include <optional>
#include <span>
#include <vector>

#include "propr/subgroup.hpp"

namespace propr {

/**
 * Every normal subgroup of a group, ordered by (order, sorted member
 * encodings), with the inclusion relation. Node 0 is the trivial subgroup and
 * the last node is the whole group.
 */
class NormalLattice {
 public:
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& node(std::size_t i) const { return nodes_[i]; }
  std::span<const Subgroup> nodes() const noexcept { return nodes_; }

  /// node i is contained in node j
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * nodes_.size() + j]; }

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return nodes_.size() - 1; }
  std::size_t derived_index() const noexcept { return derived_; }

  std::optional<std::size_t> find(const Subgroup& s) const;
  /// Node generated by nodes i and j.
  std::size_t join_index(std::size_t i, std::size_t j) const;

 private:
  friend NormalLattice normal_subgroups(const GroupPtr& g);

  GroupPtr group_;
  std::vector<Subgroup> nodes_;
  std::vector<bool> leq_;
  std::size_t derived_ = 0;
};

/// Normal closures of one representative per conjugacy class, plus the
/// trivial subgroup, closed under pairwise joins.
NormalLattice normal_subgroups(const GroupPtr& g);

/// Throws InvariantViolation if `s` is not a node: every normal subgroup is
/// expected to be present.
std::size_t find_node(const NormalLattice& lattice, const Subgroup& s);

std::vector<std::vector<bool>> inclusion_order(const NormalLattice& lattice);

}  // namespace propr
