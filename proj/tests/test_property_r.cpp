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
#include "propr/property_r.hpp"
#include "support/oracles.hpp"

using namespace propr;

namespace {

GroupPtr group(const char* spec) { return realize(parse_group_spec(spec)); }
PropertyRGraph graph(const char* spec) { return build_graph(group(spec)); }
std::vector<int> sizes(const char* spec) { return star_decomposition(graph(spec)).sizes(); }

}  // namespace

TEST_CASE("S3 graph") {
  const PropertyRGraph t = graph("S3");
  CHECK(t.out_edge == std::vector<std::size_t>{1, 1, 2});
  CHECK(t.self_loop == std::vector<bool>{false, true, true});
}

TEST_CASE("signatures of small groups") {
  CHECK(sizes("S3") == std::vector<int>{0, 1});
  CHECK(sizes("S4") == std::vector<int>{0, 2});
  CHECK(sizes("Q8") == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(sizes("C6") == std::vector<int>{0, 0, 0, 0});
  CHECK(sizes("A5") == std::vector<int>{1});
  CHECK(sizes("C1") == std::vector<int>{0});
  CHECK(sizes("GL(2,3)") == std::vector<int>{0, 3});
  CHECK(sizes("PSL(2,7)") == std::vector<int>{1});
  CHECK(sizes("S3") == sizes("D3"));
}

TEST_CASE("join and quotient computations of Q agree") {
  for (const GroupSpec& spec : catalog_specs(60, 2)) {
    const PropertyRGraph t = build_graph(realize(spec));
    CAPTURE(to_string(spec));
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(q_of(t.lattice, i) == q_oracle(t.lattice, i));
      CHECK(t.lattice.node(t.out_edge[i]) == q_subgroup(t.lattice.node(i)));
    }
    const auto expected = oracle::star_sizes(t.out_edge);
    REQUIRE(expected.has_value());
    CHECK(star_decomposition(t).sizes() == *expected);
  }
}

TEST_CASE("star decomposition rejects paths of length two") {
  PropertyRGraph t = graph("S4");
  REQUIRE(t.size() == 4);
  t.out_edge = {1, 2, 2, 3};
  t.self_loop = {false, false, true, true};
  CHECK_THROWS_AS(star_decomposition(t), InvariantViolation);
}

TEST_CASE("star signatures") {
  const StarSignature s({2, 0, 1, -1});
  CHECK(s.sizes() == std::vector<int>{-1, 0, 1, 2});
  CHECK(s.vertex_count() == 6);
  CHECK(s.has_isolated_point());
  CHECK_THROWS_AS(StarSignature({-2}), Error);
}

TEST_CASE("Property R verdicts") {
  const PropertyRVerdict a5_strict = property_r(group("A5"), PropertyRVariant::strict);
  CHECK_FALSE(a5_strict.holds);
  CHECK(a5_strict.witness == std::size_t{0});
  CHECK(property_r(group("A5"), PropertyRVariant::weak).holds);
  CHECK(property_r(group("S4"), PropertyRVariant::strict).holds);
  CHECK(property_r(group("C1"), PropertyRVariant::strict).holds);
  // SL(2,5) is perfect with center of order 2: the weak reading fails at the center
  const PropertyRVerdict sl25 = property_r(group("SL(2,5)"), PropertyRVariant::weak);
  CHECK_FALSE(sl25.holds);
  REQUIRE(sl25.witness.has_value());
  CHECK(build_graph(group("SL(2,5)")).lattice.node(*sl25.witness).order() == 2);
  // A5 x C2 has the perfect quotient A5 via the C2 factor
  CHECK_FALSE(property_r(group("C2xA5"), PropertyRVariant::weak).holds);
}

TEST_CASE("H1 along edges") {
  const PropertyRGraph s3 = graph("S3");
  CHECK(h1_edge_check(s3, {0, 1}));
  CHECK(h1_edge_check(s3, {2, 2}));
  const PropertyRGraph s4 = graph("S4");
  CHECK(h1_edge_check(s4, {1, 2}));
  CHECK_THROWS_AS(h1_edge_check(s4, {0, 3}), Error);
}

TEST_CASE("automorphisms act on edges") {
  const GroupPtr v = group("C2xC2");
  const PropertyRGraph t = build_graph(v);
  const ElementId x = v->generators()[0], y = v->generators()[1];
  const std::vector<ElementId> swap{y, x};
  const Automorphism phi = Automorphism::from_images(v, swap);
  CHECK_FALSE(phi.is_inner());
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Edge image = automorphism_edge_action(t, phi, {i, t.out_edge[i]});
    fixed += image.from == i;
  }
  CHECK(fixed == 3);  // trivial, whole group and <xy>
  const std::vector<Automorphism> auts{phi};
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(edge_stabilizer_check(t, auts, i));

  const std::vector<ElementId> collapse{x, x};
  CHECK_THROWS_AS(Automorphism::from_images(v, collapse), Error);

  const GroupPtr s3 = group("S3");
  const Automorphism inner = Automorphism::inner(s3, s3->generators()[0]);
  CHECK(inner.is_inner());
  const PropertyRGraph ts3 = build_graph(s3);
  CHECK(automorphism_edge_action(ts3, inner, {0, 1}) == Edge{0, 1});
}

TEST_CASE("functoriality of Q") {
  const GroupPtr s3 = group("S3");
  const GroupPtr c2 = group("C2");
  std::vector<ElementId> images;
  for (ElementId g : s3->generators()) {
    images.push_back(s3->element_order(g) == 2 ? c2->generators()[0] : Group::identity());
  }
  const Homomorphism sign = make_homomorphism(s3, c2, images);
  const Subgroup n1 = trivial_subgroup(s3);
  const Subgroup n2 = trivial_subgroup(c2);
  CHECK(check_functoriality(PairMorphism(sign, n1, n2)).holds);
  // f(N1) must land in N2
  CHECK_THROWS_AS(PairMorphism(sign, whole_group(s3), n2), Error);
}
