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

#include <vector>

#include "doctest.h"
#include "propr/catalog.hpp"
#include "propr/errors.hpp"
#include "propr/homomorphism.hpp"
#include "propr/lattice.hpp"
#include "propr/permutation.hpp"
#include "propr/stabilizer_chain.hpp"

using namespace propr;

namespace {

GroupPtr group(const char* spec) { return realize(parse_group_spec(spec)); }

// +1 / -1 as the two elements of C2, by counting inversions.
bool is_even(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    for (std::uint32_t j = i + 1; j < p.degree(); ++j) inversions += p(i) > p(j);
  }
  return inversions % 2 == 0;
}

}  // namespace

TEST_CASE("sign map on S4 has kernel A4") {
  const GroupPtr s4 = group("S4");
  const GroupPtr c2 = group("C2");
  std::vector<ElementId> images;
  for (ElementId x : s4->generators()) {
    images.push_back(is_even(*as_permutation(s4->element(x))) ? Group::identity() : c2->generators()[0]);
  }
  const Homomorphism sign = make_homomorphism(s4, c2, images);
  CHECK(sign.kernel().order() == 12);
  CHECK(sign.kernel() == derived_subgroup(s4));
  CHECK(sign.image().order() == 2);
  CHECK_FALSE(sign.is_bijective());
  for (ElementId x = 0; x < s4->order(); ++x) {
    CHECK((sign(x) == Group::identity()) == is_even(*as_permutation(s4->element(x))));
  }
}

TEST_CASE("invalid generator images are detected") {
  const GroupPtr c2 = group("C2");
  const GroupPtr c4 = group("C4");
  const std::vector<ElementId> images{c4->generators()[0]};
  CHECK_THROWS_AS(make_homomorphism(c2, c4, images), NotAHomomorphism);
  const std::vector<ElementId> too_few{};
  CHECK_THROWS_AS(make_homomorphism(c2, c4, too_few), Error);
}

TEST_CASE("quotients") {
  const GroupPtr s4 = group("S4");
  const NormalLattice l = normal_subgroups(s4);
  REQUIRE(l.size() == 4);
  const Subgroup& v4 = l.node(1);
  REQUIRE(v4.order() == 4);
  const Quotient q = quotient_group(s4, v4);
  CHECK(q.group->order() == 6);
  CHECK_FALSE(is_abelian(*q.group));
  CHECK(q.projection.kernel() == v4);
  CHECK(q.projection.preimage_of_subgroup(trivial_subgroup(q.group)) == v4);
  CHECK(quotient_group(s4, whole_group(s4)).group->order() == 1);
  CHECK(quotient_group(s4, trivial_subgroup(s4)).group->order() == 24);
  const ElementId t = s4->generators()[0];
  CHECK_THROWS_AS(quotient_group(s4, subgroup_generated(s4, std::span<const ElementId>(&t, 1))), Error);
}

TEST_CASE("quotients of large groups and their quotients") {
  // GL(3,3) = SL(3,3) x center; modding out the center leaves a perfect group.
  const GroupPtr gl = group("GL(3,3)");
  const NormalLattice l = normal_subgroups(gl);
  const Subgroup* centre = nullptr;
  for (const Subgroup& n : l.nodes()) {
    if (n.order() == 2) centre = &n;
  }
  REQUIRE(centre != nullptr);
  const Quotient q = quotient_group(gl, *centre);
  CHECK(q.group->order() == 5616);
  CHECK(derived_subgroup(q.group).order() == 5616);
  const Quotient qq = quotient_group(q.group, trivial_subgroup(q.group));
  CHECK(qq.group->order() == 5616);
}

TEST_CASE("PSL elements format as cosets") {
  const GroupPtr g = group("PSL(2,5)");
  CHECK(g->domain().kind() == ElementKind::coset);
  CHECK(g->element(0).to_string().back() == 'N');
}

TEST_CASE("stabilizer chain orders agree with enumeration") {
  int checked = 0;
  for (const GroupSpec& spec : catalog_specs(720, 1)) {
    const Family f = spec.atoms[0].family;
    if (f == Family::general_linear || f == Family::special_linear || f == Family::projective_special_linear) continue;
    const GroupPtr g = realize(spec);
    std::vector<Permutation> gens;
    for (ElementId x : g->generators()) gens.push_back(*as_permutation(g->element(x)));
    const StabilizerChain chain(gens);
    CAPTURE(to_string(spec));
    CHECK(chain.order() == g->order());
    for (ElementId x = 0; x < g->order(); x += 11) CHECK(chain.contains(*as_permutation(g->element(x))));
    ++checked;
  }
  CHECK(checked >= 20);
  const StabilizerChain a5({Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(Permutation::from_cycles(5, {{0, 1}})));
}
