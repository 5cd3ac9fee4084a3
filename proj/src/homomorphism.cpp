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

#include "propr/homomorphism.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "propr/errors.hpp"

namespace propr {

Subgroup Homomorphism::image() const {
  return subgroup_generated(codomain_, generator_images_);
}

Subgroup Homomorphism::image_of(const Subgroup& s) const {
  if (s.parent_ptr() != domain_) throw Error("subgroup is not in the homomorphism's domain");
  std::vector<ElementId> seed;
  for (ElementId x : s.generators()) seed.push_back(graph_[x]);
  return subgroup_generated(codomain_, seed);
}

Subgroup Homomorphism::preimage_of_subgroup(const Subgroup& s) const {
  if (s.parent_ptr() != codomain_) throw Error("subgroup is not in the homomorphism's codomain");
  std::vector<ElementId> members;
  for (ElementId x = 0; x < graph_.size(); ++x) {
    if (s.contains(graph_[x])) members.push_back(x);
  }
  return subgroup_from_members(domain_, members);
}

Subgroup Homomorphism::kernel() const { return preimage_of_subgroup(trivial_subgroup(codomain_)); }

bool Homomorphism::is_bijective() const {
  if (domain_->order() != codomain_->order()) return false;
  Bitset hit(codomain_->order());
  for (ElementId y : graph_) {
    if (hit.test(y)) return false;
    hit.set(y);
  }
  return true;
}

Homomorphism make_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                               std::span<const ElementId> images) {
  const auto gens = domain->generators();
  if (images.size() != gens.size()) throw Error("need exactly one image per domain generator");
  for (ElementId y : images) {
    if (y >= codomain->order()) throw Error("generator image out of range");
  }
  constexpr ElementId unset = ~ElementId{0};
  std::vector<ElementId> graph(domain->order(), unset);
  graph[Group::identity()] = Group::identity();
  // Ids are in discovery order, so graph[x] is known before x is expanded.
  for (ElementId x = 0; x < domain->order(); ++x) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const ElementId y = domain->times_generator(x, g);
      const ElementId fy = codomain->mul(graph[x], images[g]);
      if (graph[y] == unset) {
        graph[y] = fy;
      } else if (graph[y] != fy) {
        throw NotAHomomorphism("not a homomorphism: element " + domain->element(y).to_string() +
                                   " has two images",
                               y);
      }
    }
  }
  return Homomorphism(domain, codomain, std::vector<ElementId>(images.begin(), images.end()),
                      std::move(graph));
}

Homomorphism make_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                               const std::vector<GroupElement>& images) {
  std::vector<ElementId> ids;
  for (const auto& e : images) ids.push_back(codomain->index_of(e));
  return make_homomorphism(domain, codomain, ids);
}

CosetDomain::CosetDomain(GroupPtr parent, std::vector<std::uint32_t> coset_of,
                         std::vector<ElementId> representative)
    : ElementDomain(4), parent_(std::move(parent)), coset_of_(std::move(coset_of)),
      representative_(std::move(representative)) {}

ElementId CosetDomain::lookup(const std::uint8_t* key) const {
  const std::uint32_t c = (std::uint32_t{key[0]} << 24) | (std::uint32_t{key[1]} << 16) |
                          (std::uint32_t{key[2]} << 8) | key[3];
  if (c >= representative_.size()) throw InvariantViolation("coset index out of range");
  return representative_[c];
}

void CosetDomain::write_coset(std::uint32_t c, std::uint8_t* out) const {
  out[0] = static_cast<std::uint8_t>(c >> 24);
  out[1] = static_cast<std::uint8_t>(c >> 16);
  out[2] = static_cast<std::uint8_t>(c >> 8);
  out[3] = static_cast<std::uint8_t>(c);
}

void CosetDomain::write(ElementId parent_element, std::uint8_t* out) const {
  write_coset(coset_of_[parent_element], out);
}

void CosetDomain::identity(std::uint8_t* out) const { write(Group::identity(), out); }

void CosetDomain::multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  write(parent_->mul(lookup(a), lookup(b)), out);
}

void CosetDomain::invert(const std::uint8_t* a, std::uint8_t* out) const {
  write(parent_->inv(lookup(a)), out);
}

bool CosetDomain::same_as(const ElementDomain& other) const {
  const auto* o = dynamic_cast<const CosetDomain*>(&other);
  return o != nullptr && (o == this || (o->parent_ == parent_ && o->coset_of_ == coset_of_));
}

void CosetDomain::append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const {
  out.push_back(static_cast<std::uint8_t>(kind()));
  parent_->domain().append_encoding(parent_->key(lookup(key)).data(), out);
}

std::string CosetDomain::format(const std::uint8_t* key) const {
  return parent_->domain().format(parent_->key(lookup(key)).data()) + "N";
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent_ptr() != g) throw Error("subgroup belongs to a different group");
  if (!n.is_normal()) throw Error("quotient by a subgroup that is not normal");
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(g->order(), unset);
  std::vector<ElementId> representative;
  for (ElementId x = 0; x < g->order(); ++x) {
    if (coset_of[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(representative.size());
    ElementId best = x;
    for (ElementId m : n.elements()) {
      const ElementId y = g->mul(x, m);
      coset_of[y] = id;
      if (g->less(y, best)) best = y;
    }
    representative.push_back(best);
  }
  // Renumber cosets in representative encoding order.
  std::vector<std::uint32_t> order(representative.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return g->less(representative[a], representative[b]); });
  std::vector<std::uint32_t> renumber(representative.size());
  std::vector<ElementId> sorted_reps(representative.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    renumber[order[i]] = i;
    sorted_reps[i] = representative[order[i]];
  }
  for (auto& c : coset_of) c = renumber[c];

  auto domain = std::make_shared<const CosetDomain>(g, coset_of, sorted_reps);
  std::vector<std::vector<std::uint8_t>> keys;
  for (ElementId gen : g->generators()) {
    std::vector<std::uint8_t> k(4);
    domain->write_coset(coset_of[gen], k.data());
    keys.push_back(std::move(k));
  }
  const std::size_t count = sorted_reps.size();
  GroupPtr q = Group::enumerate(domain, keys, std::max<std::size_t>(count, 1), false);
  if (q->order() != count) throw InvariantViolation("quotient order mismatch");

  std::vector<ElementId> coset_to_q(count);
  std::uint8_t key[4];
  for (std::uint32_t c = 0; c < count; ++c) {
    domain->write_coset(c, key);
    auto id = q->find({key, 4});
    if (!id) throw InvariantViolation("coset missing from quotient");
    coset_to_q[c] = *id;
  }
  std::vector<ElementId> graph(g->order());
  for (ElementId x = 0; x < g->order(); ++x) graph[x] = coset_to_q[coset_of[x]];
  std::vector<ElementId> gen_images;
  for (ElementId gen : g->generators()) gen_images.push_back(graph[gen]);
  return Quotient{q, Homomorphism(g, q, std::move(gen_images), std::move(graph))};
}

}  // namespace propr
