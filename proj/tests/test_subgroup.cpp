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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "propr/catalog.hpp"
#include "propr/errors.hpp"
#include "propr/homomorphism.hpp"
#include "propr/subgroup.hpp"
#include "support/oracles.hpp"

using namespace propr;

namespace {

GroupPtr group(const char* spec) { return realize(parse_group_spec(spec)); }

std::vector<ElementId> sorted(std::span<const ElementId> xs) {
  std::vector<ElementId> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("derived subgroup equals the closure of all commutators") {
  for (const GroupSpec& spec : catalog_specs(120, 2)) {
    const GroupPtr g = realize(spec);
    CAPTURE(to_string(spec));
    CHECK(sorted(derived_subgroup(g).elements()) == oracle::derived_subgroup(*g));
  }
}

TEST_CASE("derived subgroups of familiar groups") {
  CHECK(derived_subgroup(group("S4")).order() == 12);
  CHECK(derived_subgroup(group("A4")).order() == 4);
  CHECK(derived_subgroup(group("Q8")).order() == 2);
  CHECK(derived_subgroup(group("A5")).order() == 60);
  CHECK(derived_subgroup(group("C2xC6")).order() == 1);
  CHECK(derived_subgroup(group("GL(2,3)")).order() == 24);
}

TEST_CASE("conjugacy classes of S4") {
  const GroupPtr g = group("S4");
  const ClassPartition p = conjugacy_classes(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : p.classes) sizes.push_back(c.members.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (ElementId x : p.classes[i].members) CHECK(p.class_of[x] == i);
  }
}

TEST_CASE("class sizes divide the group order and partition it") {
  for (const char* spec : {"A5", "GL(2,3)", "D6", "Q8xC3", "PSL(2,7)"}) {
    const GroupPtr g = group(spec);
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(g).classes) {
      CHECK(g->order() % c.members.size() == 0);
      total += c.members.size();
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("abelian invariants match element order statistics") {
  for (const GroupSpec& spec : catalog_specs(200, 2)) {
    const GroupPtr g = realize(spec);
    if (!is_abelian(*g)) continue;
    CAPTURE(to_string(spec));
    const auto inv = abelian_invariants(*g);
    for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
    CHECK(oracle::cyclic_product_statistics(inv) == oracle::order_statistics(*g));
  }
  CHECK(abelian_invariants(*group("C4xC6")) == std::vector<std::uint64_t>{2, 12});
  CHECK(abelian_invariants(*group("C1")).empty());
  CHECK_THROWS_AS(abelian_invariants(*group("S3")), Error);
}

TEST_CASE("closures and joins") {
  const GroupPtr g = group("S4");
  const ElementId t = g->generators()[0];  // a transposition
  CHECK(subgroup_generated(g, std::span<const ElementId>(&t, 1)).order() == 2);
  CHECK(normal_closure(g, std::span<const ElementId>(&t, 1)).order() == 24);
  const Subgroup a4 = derived_subgroup(g);
  CHECK(join(a4, trivial_subgroup(g)) == a4);
  CHECK(join(a4, whole_group(g)).order() == 24);
  CHECK(a4.is_normal());
  CHECK_FALSE(subgroup_generated(g, std::span<const ElementId>(&t, 1)).is_normal());
  const ElementId bad = 1000;
  CHECK_THROWS_AS(subgroup_generated(g, std::span<const ElementId>(&bad, 1)), Error);
}

TEST_CASE("subgroup from members") {
  const GroupPtr g = group("D4");
  const Subgroup z = derived_subgroup(g);
  const Subgroup again = subgroup_from_members(g, std::vector<ElementId>(z.elements().begin(), z.elements().end()));
  CHECK(again == z);
  CHECK(again.order() == 2);
}
