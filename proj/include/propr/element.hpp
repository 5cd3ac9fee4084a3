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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propr/matrix.hpp"
#include "propr/permutation.hpp"

namespace propr {

enum class ElementKind : std::uint8_t { permutation = 1, matrix = 2, coset = 3, tuple = 4 };

/**
 * Arithmetic on fixed-width byte keys.
 *
 * Every element of a domain has a key of exactly width() bytes. Keys compare
 * with memcmp in the same order as the canonical encodings (the encoding is the
 * kind tag followed by the key, recursively for tuples and cosets), so a group
 * never has to materialize encodings to pick minimal representatives.
 */
class ElementDomain {
 public:
  virtual ~ElementDomain() = default;

  virtual ElementKind kind() const noexcept = 0;
  std::size_t width() const noexcept { return width_; }

  virtual void identity(std::uint8_t* out) const = 0;
  virtual void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const = 0;
  virtual void invert(const std::uint8_t* a, std::uint8_t* out) const = 0;

  /// Same element set and operation (degree, field and dimension, components).
  virtual bool same_as(const ElementDomain& other) const = 0;

  virtual void append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const;
  virtual std::string format(const std::uint8_t* key) const = 0;

 protected:
  explicit ElementDomain(std::size_t width) : width_(width) {}

 private:
  std::size_t width_;
};

using DomainPtr = std::shared_ptr<const ElementDomain>;

/// Images stored one byte per point for degree <= 256, otherwise two bytes big-endian.
class PermutationDomain final : public ElementDomain {
 public:
  explicit PermutationDomain(std::uint32_t degree);

  ElementKind kind() const noexcept override { return ElementKind::permutation; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const override;
  void invert(const std::uint8_t* a, std::uint8_t* out) const override;
  bool same_as(const ElementDomain& other) const override;
  std::string format(const std::uint8_t* key) const override;

  std::uint32_t degree() const noexcept { return degree_; }
  Permutation decode(const std::uint8_t* key) const;
  void encode(const Permutation& p, std::uint8_t* out) const;

 private:
  std::uint32_t get(const std::uint8_t* key, std::uint32_t i) const noexcept {
    return wide_ ? (std::uint32_t{key[2 * i]} << 8) | key[2 * i + 1] : key[i];
  }
  void put(std::uint8_t* key, std::uint32_t i, std::uint32_t v) const noexcept {
    if (wide_) {
      key[2 * i] = static_cast<std::uint8_t>(v >> 8);
      key[2 * i + 1] = static_cast<std::uint8_t>(v);
    } else {
      key[i] = static_cast<std::uint8_t>(v);
    }
  }

  std::uint32_t degree_;
  bool wide_;
};

/// Invertible n x n matrices; each entry's field integer in one byte for q <= 256, else two.
class MatrixDomain final : public ElementDomain {
 public:
  static constexpr std::uint32_t max_dimension = 4;

  MatrixDomain(FieldPtr field, std::uint32_t n);

  ElementKind kind() const noexcept override { return ElementKind::matrix; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const override;
  void invert(const std::uint8_t* a, std::uint8_t* out) const override;
  bool same_as(const ElementDomain& other) const override;
  std::string format(const std::uint8_t* key) const override;

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t dimension() const noexcept { return n_; }
  Matrix decode(const std::uint8_t* key) const;
  void encode(const Matrix& m, std::uint8_t* out) const;

 private:
  void load(const std::uint8_t* key, std::uint32_t* out) const noexcept;
  void store(const std::uint32_t* in, std::uint8_t* key) const noexcept;

  FieldPtr field_;
  std::uint32_t n_;
  bool wide_;
};

/// Direct product: the key is the concatenation of the component keys.
class TupleDomain final : public ElementDomain {
 public:
  explicit TupleDomain(std::vector<DomainPtr> components);

  ElementKind kind() const noexcept override { return ElementKind::tuple; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const override;
  void invert(const std::uint8_t* a, std::uint8_t* out) const override;
  bool same_as(const ElementDomain& other) const override;
  void append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const override;
  std::string format(const std::uint8_t* key) const override;

  const std::vector<DomainPtr>& components() const noexcept { return components_; }
  std::size_t offset(std::size_t i) const noexcept { return offsets_[i]; }

 private:
  static std::size_t total_width(const std::vector<DomainPtr>& components);

  std::vector<DomainPtr> components_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint8_t> identity_;
};

/// A value-type group element: a domain plus one key.
class GroupElement {
 public:
  GroupElement(DomainPtr domain, std::vector<std::uint8_t> key);

  const ElementDomain& domain() const noexcept { return *domain_; }
  const DomainPtr& domain_ptr() const noexcept { return domain_; }
  ElementKind kind() const noexcept { return domain_->kind(); }
  std::span<const std::uint8_t> key() const noexcept { return key_; }

  GroupElement operator*(const GroupElement& other) const;  // throws on domain mismatch
  GroupElement inverse() const;
  bool is_identity() const;
  std::string to_string() const { return domain_->format(key_.data()); }

  bool operator==(const GroupElement& other) const;

 private:
  DomainPtr domain_;
  std::vector<std::uint8_t> key_;
};

GroupElement make_element(const Permutation& p);
/// Throws propr::Error if the matrix is singular or too large.
GroupElement make_element(const Matrix& m);
GroupElement make_tuple(const std::vector<GroupElement>& components);
GroupElement identity_like(const GroupElement& e);

/// Kind tag then payload; tuples concatenate component encodings. Injective
/// within a domain and ordered like the keys.
std::vector<std::uint8_t> element_encode(const GroupElement& e);

std::optional<Permutation> as_permutation(const GroupElement& e);
std::optional<Matrix> as_matrix(const GroupElement& e);

}  // namespace propr
