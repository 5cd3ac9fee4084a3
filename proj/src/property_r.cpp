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

#include "propr/property_r.hpp"

#include <algorithm>

#include "propr/errors.hpp"

namespace propr {

std::size_t q_of(const NormalLattice& lattice, std::size_t i) {
  if (i >= lattice.size()) throw Error("vertex out of range");
  return lattice.join_index(lattice.derived_index(), i);
}

std::size_t q_oracle(const NormalLattice& lattice, std::size_t i) {
  if (i >= lattice.size()) throw Error("vertex out of range");
  const Quotient q = quotient_group(lattice.group(), lattice.node(i));
  const Subgroup derived = derived_subgroup(q.group);
  return find_node(lattice, q.projection.preimage_of_subgroup(derived));
}

Subgroup q_subgroup(const Subgroup& n) {
  if (!n.is_normal()) throw Error("Q(G, N) needs a normal subgroup");
  return join(derived_subgroup(n.parent_ptr()), n);
}

PropertyRGraph build_graph(const GroupPtr& g) { return build_graph(normal_subgroups(g)); }

PropertyRGraph build_graph(NormalLattice lattice) {
  PropertyRGraph graph{std::move(lattice), {}, {}};
  const std::size_t k = graph.lattice.size();
  graph.out_edge.resize(k);
  graph.self_loop.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    graph.out_edge[i] = q_of(graph.lattice, i);
    graph.self_loop[i] = graph.out_edge[i] == i;
  }
  return graph;
}

StarSignature::StarSignature(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < -1) throw Error("star sizes must be at least -1");
  }
  std::sort(sizes_.begin(), sizes_.end());
}

std::size_t StarSignature::vertex_count() const noexcept {
  std::size_t n = 0;
  for (int s : sizes_) n += static_cast<std::size_t>(s + 1);
  return n;
}

bool StarSignature::has_isolated_point() const noexcept {
  return !sizes_.empty() && sizes_.front() == -1;
}

StarSignature star_decomposition(const PropertyRGraph& graph) {
  const std::size_t k = graph.size();
  std::vector<int> in_degree(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (graph.out_edge[i] != i) ++in_degree[graph.out_edge[i]];
  }
  std::vector<int> sizes;
  for (std::size_t i = 0; i < k; ++i) {
    if (graph.self_loop[i]) {
      sizes.push_back(in_degree[i]);
      continue;
    }
    const std::size_t c = graph.out_edge[i];
    if (!graph.self_loop[c] || in_degree[i] != 0) {
      throw InvariantViolation("Property R graph is not a union of looped stars (vertex " +
                               std::to_string(i) + ")");
    }
  }
  return StarSignature(std::move(sizes));
}

PropertyRVerdict property_r(const PropertyRGraph& graph, PropertyRVariant variant) {
  const std::size_t whole = graph.lattice.whole_index();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (i == whole || graph.out_edge[i] != whole) continue;
    if (variant == PropertyRVariant::weak && i == graph.lattice.trivial_index()) continue;
    return {false, i};
  }
  return {true, std::nullopt};
}

PropertyRVerdict property_r(const GroupPtr& g, PropertyRVariant variant) {
  return property_r(build_graph(g), variant);
}

PairMorphism::PairMorphism(Homomorphism f, Subgroup n1, Subgroup n2)
    : f_(std::move(f)), n1_(std::move(n1)), n2_(std::move(n2)) {
  if (n1_.parent_ptr() != f_.domain() || n2_.parent_ptr() != f_.codomain()) {
    throw Error("pair morphism subgroups do not match the map's domain and codomain");
  }
  if (!n1_.is_normal() || !n2_.is_normal()) throw Error("pair morphism needs normal subgroups");
  for (ElementId x : n1_.generators()) {
    if (!n2_.contains(f_(x))) throw Error("pair morphism does not map N1 into N2");
  }
}

FunctorialityResult check_functoriality(const PairMorphism& m) {
  const Subgroup q1 = q_subgroup(m.source());
  const Subgroup q2 = q_subgroup(m.target());
  for (ElementId x : q1.elements()) {
    if (!q2.contains(m.map()(x))) return {false, x};
  }
  return {true, std::nullopt};
}

Automorphism Automorphism::inner(const GroupPtr& g, ElementId conjugator) {
  std::vector<ElementId> images;
  for (ElementId gen : g->generators()) images.push_back(g->conj(conjugator, gen));
  return Automorphism(make_homomorphism(g, g, images), conjugator);
}

Automorphism Automorphism::from_images(const GroupPtr& g, std::span<const ElementId> generator_images) {
  Homomorphism f = make_homomorphism(g, g, generator_images);
  if (!f.is_bijective()) throw Error("generator images do not define a bijection");
  return Automorphism(std::move(f), std::nullopt);
}

Automorphism Automorphism::from_images(const GroupPtr& g,
                                       const std::vector<GroupElement>& generator_images) {
  std::vector<ElementId> ids;
  for (const auto& e : generator_images) ids.push_back(g->index_of(e));
  return from_images(g, ids);
}

Edge automorphism_edge_action(const PropertyRGraph& graph, const Automorphism& phi, Edge edge) {
  if (phi.map().domain() != graph.group()) throw Error("automorphism of a different group");
  if (!phi.map().is_bijective()) throw Error("automorphism is not bijective");
  if (edge.from >= graph.size() || graph.out_edge[edge.from] != edge.to) {
    throw Error("not an edge of the Property R graph");
  }
  const Edge image{find_node(graph.lattice, phi.apply(graph.lattice.node(edge.from))),
                   find_node(graph.lattice, phi.apply(graph.lattice.node(edge.to)))};
  if (graph.out_edge[image.from] != image.to) {
    throw InvariantViolation("automorphism maps an edge to a non-edge");
  }
  return image;
}

bool edge_stabilizer_check(const PropertyRGraph& graph, std::span<const Automorphism> auts,
                           std::size_t vertex) {
  const Subgroup& source = graph.lattice.node(vertex);
  const Subgroup& target = graph.lattice.node(graph.out_edge[vertex]);
  for (const auto& phi : auts) {
    const bool fixes_source = phi.apply(source) == source;
    const bool fixes_edge = fixes_source && phi.apply(target) == target;
    if (fixes_edge != fixes_source) return false;
  }
  return true;
}

bool h1_edge_check(const PropertyRGraph& graph, Edge edge) {
  if (edge.from >= graph.size() || graph.out_edge[edge.from] != edge.to) {
    throw Error("not an edge of the Property R graph");
  }
  const Quotient qa = quotient_group(graph.group(), graph.lattice.node(edge.from));
  const Quotient abelianized = quotient_group(qa.group, derived_subgroup(qa.group));
  const Quotient qb = quotient_group(graph.group(), graph.lattice.node(edge.to));
  if (!is_abelian(*qb.group)) return false;
  return abelian_invariants(*abelianized.group) == abelian_invariants(*qb.group);
}

}  // namespace propr
