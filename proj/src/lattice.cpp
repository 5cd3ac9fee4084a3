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

#include "propr/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "propr/errors.hpp"

namespace propr {

namespace {

// Deduplicating node store used while the lattice grows.
class NodePool {
 public:
  explicit NodePool(GroupPtr g) : group_(std::move(g)) {}

  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& operator[](std::size_t i) const { return nodes_[i]; }
  std::vector<Subgroup> take() && { return std::move(nodes_); }

  std::optional<std::size_t> find(const Subgroup& s) const {
    auto [lo, hi] = by_hash_.equal_range(s.members().hash());
    for (auto it = lo; it != hi; ++it) {
      if (nodes_[it->second] == s) return it->second;
    }
    return std::nullopt;
  }

  std::size_t add(Subgroup s) {
    if (auto found = find(s)) return *found;
    const std::size_t id = nodes_.size();
    by_hash_.emplace(s.members().hash(), id);
    by_order_[s.order()].push_back(id);
    nodes_.push_back(std::move(s));
    return id;
  }

  // The join of normal subgroups A, B is AB, of order |A||B|/|A n B|; any
  // node of that order containing both is the join.
  std::size_t join(std::size_t a, std::size_t b) {
    const Subgroup& A = nodes_[a];
    const Subgroup& B = nodes_[b];
    if (A.is_subset_of(B)) return b;
    if (B.is_subset_of(A)) return a;
    const std::uint64_t expected =
        std::uint64_t{A.order()} * B.order() / A.members().intersection_count(B.members());
    if (auto it = by_order_.find(expected); it != by_order_.end()) {
      for (std::size_t c : it->second) {
        if (A.is_subset_of(nodes_[c]) && B.is_subset_of(nodes_[c])) return c;
      }
    }
    Subgroup j = propr::join(A, B);
    if (j.order() != expected) throw InvariantViolation("join of normal subgroups has unexpected order");
    return add(std::move(j));
  }

 private:
  GroupPtr group_;
  std::vector<Subgroup> nodes_;
  std::unordered_multimap<std::size_t, std::size_t> by_hash_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_order_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

NormalLattice normal_subgroups(const GroupPtr& g) {
  const ClassPartition classes = conjugacy_classes(g);
  NodePool pool(g);
  pool.add(trivial_subgroup(g));

  // x and x^k (k prime to the order) have the same normal closure.
  std::vector<bool> covered(classes.classes.size(), false);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    if (covered[c]) continue;
    const ElementId x = classes.classes[c].representative;
    const ElementId seed[] = {x};
    pool.add(normal_closure(g, seed));
    const std::uint64_t ord = g->element_order(x);
    ElementId y = x;
    for (std::uint64_t k = 1; k < ord; ++k) {
      if (gcd(k, ord) == 1) covered[classes.class_of[y]] = true;
      y = g->mul(y, x);
    }
    covered[c] = true;
  }

  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) pool.join(a, b);
  }

  std::vector<Subgroup> nodes = std::move(pool).take();
  std::vector<std::vector<std::uint32_t>> fingerprints;
  fingerprints.reserve(nodes.size());
  for (const auto& n : nodes) {
    std::vector<std::uint32_t> f;
    f.reserve(n.order());
    for (ElementId x : n.elements()) f.push_back(g->encoding_rank(x));
    std::sort(f.begin(), f.end());
    fingerprints.push_back(std::move(f));
  }
  std::vector<std::size_t> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].order() != nodes[b].order()) return nodes[a].order() < nodes[b].order();
    return fingerprints[a] < fingerprints[b];
  });

  NormalLattice lattice;
  lattice.group_ = g;
  for (std::size_t i : perm) lattice.nodes_.push_back(std::move(nodes[i]));
  const std::size_t k = lattice.nodes_.size();
  lattice.leq_.assign(k * k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      lattice.leq_[i * k + j] = lattice.nodes_[i].is_subset_of(lattice.nodes_[j]);
    }
  }
  if (lattice.nodes_.front().order() != 1 || lattice.nodes_.back().order() != g->order()) {
    throw InvariantViolation("normal lattice is missing the trivial or whole subgroup");
  }
  lattice.derived_ = find_node(lattice, derived_subgroup(g));
  return lattice;
}

std::optional<std::size_t> NormalLattice::find(const Subgroup& s) const {
  if (s.parent_ptr() != group_) return std::nullopt;
  auto lo = std::lower_bound(nodes_.begin(), nodes_.end(), s.order(),
                             [](const Subgroup& n, std::size_t order) { return n.order() < order; });
  for (auto it = lo; it != nodes_.end() && it->order() == s.order(); ++it) {
    if (*it == s) return static_cast<std::size_t>(it - nodes_.begin());
  }
  return std::nullopt;
}

std::size_t NormalLattice::join_index(std::size_t i, std::size_t j) const {
  if (leq(i, j)) return j;
  if (leq(j, i)) return i;
  const Subgroup& A = nodes_[i];
  const Subgroup& B = nodes_[j];
  const std::uint64_t expected =
      std::uint64_t{A.order()} * B.order() / A.members().intersection_count(B.members());
  for (std::size_t c = 0; c < nodes_.size(); ++c) {
    if (nodes_[c].order() == expected && leq(i, c) && leq(j, c)) return c;
  }
  throw InvariantViolation("normal lattice is not closed under joins");
}

std::size_t find_node(const NormalLattice& lattice, const Subgroup& s) {
  if (auto i = lattice.find(s)) return *i;
  throw InvariantViolation("normal subgroup of order " + std::to_string(s.order()) +
                           " is missing from the lattice");
}

std::vector<std::vector<bool>> inclusion_order(const NormalLattice& lattice) {
  std::vector<std::vector<bool>> m(lattice.size(), std::vector<bool>(lattice.size()));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < lattice.size(); ++j) m[i][j] = lattice.leq(i, j);
  }
  return m;
}

}  // namespace propr
