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
#include <string>
#include <vector>

#include "propr/errors.hpp"
#include "propr/subgroup.hpp"

namespace propr {

struct Quotient;

/// Thrown when generator images do not extend to a homomorphism.
class NotAHomomorphism : public Error {
 public:
  NotAHomomorphism(const std::string& what, ElementId witness) : Error(what), witness_(witness) {}
  /// Domain element that acquired two different images.
  ElementId witness() const noexcept { return witness_; }

 private:
  ElementId witness_;
};

/// A group homomorphism with its complete graph x -> f(x).
class Homomorphism {
 public:
  const GroupPtr& domain() const noexcept { return domain_; }
  const GroupPtr& codomain() const noexcept { return codomain_; }
  std::span<const ElementId> generator_images() const noexcept { return generator_images_; }
  ElementId operator()(ElementId x) const noexcept { return graph_[x]; }

  Subgroup image() const;
  Subgroup image_of(const Subgroup& s) const;
  /// All domain elements whose image lies in s.
  Subgroup preimage_of_subgroup(const Subgroup& s) const;
  Subgroup kernel() const;
  bool is_bijective() const;

 private:
  friend Homomorphism make_homomorphism(const GroupPtr&, const GroupPtr&, std::span<const ElementId>);
  friend Quotient quotient_group(const GroupPtr&, const Subgroup&);

  Homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<ElementId> generator_images,
               std::vector<ElementId> graph)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        generator_images_(std::move(generator_images)), graph_(std::move(graph)) {}

  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<ElementId> generator_images_;
  std::vector<ElementId> graph_;
};

/**
 * Extends one image per domain generator to the whole domain by walking the
 * domain's Cayley graph along pairs (x, f(x)). A domain element reached with
 * two different images raises NotAHomomorphism.
 */
Homomorphism make_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                               std::span<const ElementId> images);
Homomorphism make_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                               const std::vector<GroupElement>& images);

/**
 * Elements are cosets gN. A key is the 4-byte big-endian coset index; cosets
 * must be numbered in the encoding order of their representatives so that
 * key order matches encoding order. The encoding of a coset is the encoding
 * of its minimal representative.
 */
class CosetDomain final : public ElementDomain {
 public:
  CosetDomain(GroupPtr parent, std::vector<std::uint32_t> coset_of, std::vector<ElementId> representative);

  ElementKind kind() const noexcept override { return ElementKind::coset; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const override;
  void invert(const std::uint8_t* a, std::uint8_t* out) const override;
  bool same_as(const ElementDomain& other) const override;
  void append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const override;
  std::string format(const std::uint8_t* key) const override;

  const Group& parent() const noexcept { return *parent_; }
  std::size_t coset_count() const noexcept { return representative_.size(); }
  /// Writes the 4-byte key of coset number `coset`.
  void write_coset(std::uint32_t coset, std::uint8_t* out) const;

 private:
  ElementId lookup(const std::uint8_t* key) const;
  void write(ElementId parent_element, std::uint8_t* out) const;

  GroupPtr parent_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<ElementId> representative_;
};

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
};

/// G/N with the projection g -> gN. Throws propr::Error if N is not normal.
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

}  // namespace propr
