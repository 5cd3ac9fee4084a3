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
#include <string>
#include <vector>

#include "propr/homomorphism.hpp"
#include "propr/lattice.hpp"

namespace propr {

/// Functional digraph on the normal lattice: N_i -> Q(G, N_i).
struct PropertyRGraph {
  NormalLattice lattice;
  std::vector<std::size_t> out_edge;
  std::vector<bool> self_loop;

  std::size_t size() const noexcept { return out_edge.size(); }
  const GroupPtr& group() const noexcept { return lattice.group(); }
};

struct Edge {
  std::size_t from;
  std::size_t to;

  bool operator==(const Edge&) const = default;
};

/// Q(G, N_i) as a lattice vertex, computed as the join G' N_i.
std::size_t q_of(const NormalLattice& lattice, std::size_t i);

/// Q(G, N_i) the long way: project to G/N_i, take the derived subgroup there,
/// pull it back and look it up. Kept as an independent cross-check of q_of.
std::size_t q_oracle(const NormalLattice& lattice, std::size_t i);

/// Q(G, N) for any normal subgroup, without a lattice.
Subgroup q_subgroup(const Subgroup& n);

PropertyRGraph build_graph(const GroupPtr& g);
PropertyRGraph build_graph(NormalLattice lattice);

/**
 * Multiset of looped-star sizes: one entry j per component consisting of a
 * looped center with j leaves. Sorted ascending. A value of -1 denotes an
 * isolated vertex; it can be parsed but never arises from a computed graph.
 */
class StarSignature {
 public:
  StarSignature() = default;
  explicit StarSignature(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  std::size_t star_count() const noexcept { return sizes_.size(); }
  /// Sum of (j + 1): the number of vertices of the graph.
  std::size_t vertex_count() const noexcept;
  bool has_isolated_point() const noexcept;

  bool operator==(const StarSignature&) const = default;

 private:
  std::vector<int> sizes_;
};

/// Throws InvariantViolation if the graph is not a disjoint union of looped stars.
StarSignature star_decomposition(const PropertyRGraph& graph);

enum class PropertyRVariant { strict, weak };

struct PropertyRVerdict {
  bool holds = true;
  std::optional<std::size_t> witness;  // vertex N with Q(G, N) = G, N proper
};

/// strict: no proper normal N has a perfect quotient G/N. weak: the same for
/// nontrivial N only.
PropertyRVerdict property_r(const PropertyRGraph& graph, PropertyRVariant variant);
PropertyRVerdict property_r(const GroupPtr& g, PropertyRVariant variant);

/// A morphism of pairs (G1, N1) -> (G2, N2): f(N1) is contained in N2.
class PairMorphism {
 public:
  /// Throws propr::Error unless n1, n2 are normal subgroups of the domain and
  /// codomain and f(n1) lies in n2.
  PairMorphism(Homomorphism f, Subgroup n1, Subgroup n2);

  const Homomorphism& map() const noexcept { return f_; }
  const Subgroup& source() const noexcept { return n1_; }
  const Subgroup& target() const noexcept { return n2_; }

 private:
  Homomorphism f_;
  Subgroup n1_;
  Subgroup n2_;
};

struct FunctorialityResult {
  bool holds = true;
  std::optional<ElementId> witness;  // element of Q(G1, N1) mapped outside Q(G2, N2)
};

/// Checks f(Q(G1, N1)) is contained in Q(G2, N2) element by element.
FunctorialityResult check_functoriality(const PairMorphism& m);

class Automorphism {
 public:
  /// x -> g x g^-1
  static Automorphism inner(const GroupPtr& g, ElementId conjugator);
  /// Throws propr::Error if the images do not define a bijective endomorphism.
  static Automorphism from_images(const GroupPtr& g, std::span<const ElementId> generator_images);
  static Automorphism from_images(const GroupPtr& g, const std::vector<GroupElement>& generator_images);

  const Homomorphism& map() const noexcept { return map_; }
  bool is_inner() const noexcept { return conjugator_.has_value(); }
  std::optional<ElementId> conjugator() const noexcept { return conjugator_; }
  Subgroup apply(const Subgroup& s) const { return map_.image_of(s); }

 private:
  Automorphism(Homomorphism map, std::optional<ElementId> conjugator)
      : map_(std::move(map)), conjugator_(conjugator) {}

  Homomorphism map_;
  std::optional<ElementId> conjugator_;
};

/// Image of the edge under the automorphism. Throws propr::Error if `edge` is
/// not an edge and InvariantViolation if its image is not an edge.
Edge automorphism_edge_action(const PropertyRGraph& graph, const Automorphism& phi, Edge edge);

/// For each automorphism: it fixes the edge i -> Q(G, N_i) iff it fixes N_i.
bool edge_stabilizer_check(const PropertyRGraph& graph, std::span<const Automorphism> auts,
                           std::size_t vertex);

/// Compares the invariant factors of H1(G/a) and G/b for an edge a -> b.
bool h1_edge_check(const PropertyRGraph& graph, Edge edge);

}  // namespace propr
