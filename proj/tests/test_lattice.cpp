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
#include "propr/lattice.hpp"
#include "support/oracles.hpp"

using namespace propr;

namespace {

std::vector<std::size_t> orders(const NormalLattice& l) {
  std::vector<std::size_t> out;
  for (const Subgroup& s : l.nodes()) out.push_back(s.order());
  return out;
}

NormalLattice lattice(const char* spec) { return normal_subgroups(realize(parse_group_spec(spec))); }

}  // namespace

TEST_CASE("lattice equals the brute-force normal subgroups") {
  for (const GroupSpec& spec : catalog_specs(96, 2)) {
    const GroupPtr g = realize(spec);
    const NormalLattice l = normal_subgroups(g);
    std::vector<std::vector<ElementId>> mine;
    for (const Subgroup& s : l.nodes()) {
      std::vector<ElementId> m(s.elements().begin(), s.elements().end());
      std::sort(m.begin(), m.end());
      mine.push_back(std::move(m));
    }
    std::sort(mine.begin(), mine.end());
    auto brute = oracle::normal_subgroups(*g);
    std::sort(brute.begin(), brute.end());
    CAPTURE(to_string(spec));
    CHECK(mine == brute);
  }
}

TEST_CASE("lattices of small groups") {
  CHECK(orders(lattice("S3")) == std::vector<std::size_t>{1, 3, 6});
  CHECK(orders(lattice("S4")) == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(orders(lattice("Q8")) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(orders(lattice("A5")) == std::vector<std::size_t>{1, 60});
  CHECK(orders(lattice("C2xC2")) == std::vector<std::size_t>{1, 2, 2, 2, 4});
  CHECK(orders(lattice("D4")) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(orders(lattice("C1")) == std::vector<std::size_t>{1});
}

TEST_CASE("lattice order, joins and lookup") {
  const NormalLattice l = lattice("D6");
  const std::size_t k = l.size();
  CHECK(l.node(l.trivial_index()).order() == 1);
  CHECK(l.node(l.whole_index()).order() == 12);
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(l.find(l.node(i)) == i);
    CHECK(l.leq(l.trivial_index(), i));
    CHECK(l.leq(i, l.whole_index()));
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t m = l.join_index(i, j);
      CHECK(l.leq(i, m));
      CHECK(l.leq(j, m));
      CHECK(l.node(m) == join(l.node(i), l.node(j)));
    }
  }
  const auto table = inclusion_order(l);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) CHECK(table[i][j] == l.leq(i, j));
  }
  CHECK(l.node(l.derived_index()) == derived_subgroup(l.group()));
}

TEST_CASE("nodes are sorted by order") {
  const NormalLattice l = lattice("C2xD4");
  for (std::size_t i = 1; i < l.size(); ++i) CHECK(l.node(i - 1).order() <= l.node(i).order());
}
