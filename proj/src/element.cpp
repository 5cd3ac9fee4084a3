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

#include "propr/element.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <sstream>

#include "propr/errors.hpp"

namespace propr {

void ElementDomain::append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const {
  out.push_back(static_cast<std::uint8_t>(kind()));
  out.insert(out.end(), key, key + width());
}

// ---------------------------------------------------------------------------
// Permutations

PermutationDomain::PermutationDomain(std::uint32_t degree)
    : ElementDomain(degree > 256 ? 2 * std::size_t{degree} : degree), degree_(degree),
      wide_(degree > 256) {
  if (degree == 0 || degree > 65536) throw Error("permutation degree out of range");
}

void PermutationDomain::identity(std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < degree_; ++i) put(out, i, i);
}

void PermutationDomain::multiply(const std::uint8_t* a, const std::uint8_t* b,
                                 std::uint8_t* out) const {
  if (!wide_) {
    for (std::uint32_t x = 0; x < degree_; ++x) out[x] = a[b[x]];
    return;
  }
  for (std::uint32_t x = 0; x < degree_; ++x) put(out, x, get(a, get(b, x)));
}

void PermutationDomain::invert(const std::uint8_t* a, std::uint8_t* out) const {
  for (std::uint32_t x = 0; x < degree_; ++x) put(out, get(a, x), x);
}

bool PermutationDomain::same_as(const ElementDomain& other) const {
  const auto* o = dynamic_cast<const PermutationDomain*>(&other);
  return o != nullptr && o->degree_ == degree_;
}

std::string PermutationDomain::format(const std::uint8_t* key) const {
  // Cycle notation, fixed points omitted.
  std::ostringstream os;
  std::vector<bool> seen(degree_, false);
  bool any = false;
  for (std::uint32_t start = 0; start < degree_; ++start) {
    if (seen[start] || get(key, start) == start) continue;
    any = true;
    os << '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ' ';
      os << x;
      first = false;
      x = get(key, x);
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation PermutationDomain::decode(const std::uint8_t* key) const {
  std::vector<std::uint32_t> images(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) images[i] = get(key, i);
  return Permutation(std::move(images));
}

void PermutationDomain::encode(const Permutation& p, std::uint8_t* out) const {
  if (p.degree() != degree_) throw Error("permutation degree mismatch");
  for (std::uint32_t i = 0; i < degree_; ++i) put(out, i, p(i));
}

// ---------------------------------------------------------------------------
// Matrices

MatrixDomain::MatrixDomain(FieldPtr field, std::uint32_t n)
    : ElementDomain(std::size_t{n} * n * (field->order() > 256 ? 2 : 1)), field_(std::move(field)),
      n_(n), wide_(field_->order() > 256) {
  if (n == 0 || n > max_dimension) throw Error("matrix dimension must be between 1 and 4");
}

void MatrixDomain::load(const std::uint8_t* key, std::uint32_t* out) const noexcept {
  const std::uint32_t count = n_ * n_;
  if (wide_) {
    for (std::uint32_t i = 0; i < count; ++i) out[i] = (std::uint32_t{key[2 * i]} << 8) | key[2 * i + 1];
  } else {
    for (std::uint32_t i = 0; i < count; ++i) out[i] = key[i];
  }
}

void MatrixDomain::store(const std::uint32_t* in, std::uint8_t* key) const noexcept {
  const std::uint32_t count = n_ * n_;
  if (wide_) {
    for (std::uint32_t i = 0; i < count; ++i) {
      key[2 * i] = static_cast<std::uint8_t>(in[i] >> 8);
      key[2 * i + 1] = static_cast<std::uint8_t>(in[i]);
    }
  } else {
    for (std::uint32_t i = 0; i < count; ++i) key[i] = static_cast<std::uint8_t>(in[i]);
  }
}

void MatrixDomain::identity(std::uint8_t* out) const {
  std::array<std::uint32_t, 16> m{};
  for (std::uint32_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
  store(m.data(), out);
}

void MatrixDomain::multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  std::array<std::uint32_t, 16> ma, mb, mc;
  load(a, ma.data());
  load(b, mb.data());
  kernel::mat_mul(*field_, n_, ma.data(), mb.data(), mc.data());
  store(mc.data(), out);
}

void MatrixDomain::invert(const std::uint8_t* a, std::uint8_t* out) const {
  std::array<std::uint32_t, 16> ma, mi;
  load(a, ma.data());
  if (!kernel::mat_inv(*field_, n_, ma.data(), mi.data())) {
    throw InvariantViolation("singular matrix inside a matrix group");
  }
  store(mi.data(), out);
}

bool MatrixDomain::same_as(const ElementDomain& other) const {
  const auto* o = dynamic_cast<const MatrixDomain*>(&other);
  return o != nullptr && o->n_ == n_ && *o->field_ == *field_;
}

std::string MatrixDomain::format(const std::uint8_t* key) const {
  std::array<std::uint32_t, 16> m;
  load(key, m.data());
  std::ostringstream os;
  os << '[';
  for (std::uint32_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::uint32_t j = 0; j < n_; ++j) os << (j ? "," : "") << m[i * n_ + j];
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix MatrixDomain::decode(const std::uint8_t* key) const {
  std::array<std::uint32_t, 16> m;
  load(key, m.data());
  std::vector<FieldElement> entries(n_ * n_);
  for (std::uint32_t i = 0; i < n_ * n_; ++i) entries[i] = {m[i]};
  return Matrix(field_, n_, std::move(entries));
}

void MatrixDomain::encode(const Matrix& mat, std::uint8_t* out) const {
  if (mat.dimension() != n_ || !(*mat.field() == *field_)) throw Error("matrix domain mismatch");
  std::array<std::uint32_t, 16> m;
  for (std::uint32_t i = 0; i < n_ * n_; ++i) m[i] = mat.entries()[i].value;
  store(m.data(), out);
}

// ---------------------------------------------------------------------------
// Tuples

std::size_t TupleDomain::total_width(const std::vector<DomainPtr>& components) {
  std::size_t w = 0;
  for (const auto& c : components) w += c->width();
  return w;
}

TupleDomain::TupleDomain(std::vector<DomainPtr> components)
    : ElementDomain(total_width(components)), components_(std::move(components)) {
  if (components_.empty()) throw Error("tuple needs at least one component");
  std::size_t off = 0;
  for (const auto& c : components_) {
    offsets_.push_back(off);
    off += c->width();
  }
  identity_.resize(width());
  identity(identity_.data());
}

void TupleDomain::identity(std::uint8_t* out) const {
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i]->identity(out + offsets_[i]);
}

void TupleDomain::multiply(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::size_t off = offsets_[i];
    const std::size_t w = components_[i]->width();
    // product generators are the identity in all but one component
    if (std::memcmp(b + off, identity_.data() + off, w) == 0) {
      std::memcpy(out + off, a + off, w);
    } else {
      components_[i]->multiply(a + off, b + off, out + off);
    }
  }
}

void TupleDomain::invert(const std::uint8_t* a, std::uint8_t* out) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i]->invert(a + offsets_[i], out + offsets_[i]);
  }
}

bool TupleDomain::same_as(const ElementDomain& other) const {
  const auto* o = dynamic_cast<const TupleDomain*>(&other);
  if (o == nullptr || o->components_.size() != components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i]->same_as(*o->components_[i])) return false;
  }
  return true;
}

void TupleDomain::append_encoding(const std::uint8_t* key, std::vector<std::uint8_t>& out) const {
  out.push_back(static_cast<std::uint8_t>(kind()));
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i]->append_encoding(key + offsets_[i], out);
  }
}

std::string TupleDomain::format(const std::uint8_t* key) const {
  std::string s = "<";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ", ";
    s += components_[i]->format(key + offsets_[i]);
  }
  return s + ">";
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(DomainPtr domain, std::vector<std::uint8_t> key)
    : domain_(std::move(domain)), key_(std::move(key)) {
  if (key_.size() != domain_->width()) throw Error("element key has the wrong width");
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (!domain_->same_as(*other.domain_)) throw Error("cannot multiply elements of different domains");
  std::vector<std::uint8_t> out(key_.size());
  domain_->multiply(key_.data(), other.key_.data(), out.data());
  return GroupElement(domain_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint8_t> out(key_.size());
  domain_->invert(key_.data(), out.data());
  return GroupElement(domain_, std::move(out));
}

bool GroupElement::is_identity() const {
  std::vector<std::uint8_t> id(key_.size());
  domain_->identity(id.data());
  return id == key_;
}

bool GroupElement::operator==(const GroupElement& other) const {
  return key_ == other.key_ && domain_->same_as(*other.domain_);
}

GroupElement make_element(const Permutation& p) {
  auto domain = std::make_shared<const PermutationDomain>(p.degree());
  std::vector<std::uint8_t> key(domain->width());
  domain->encode(p, key.data());
  return GroupElement(std::move(domain), std::move(key));
}

GroupElement make_element(const Matrix& m) {
  if (mat_det(m) == m.field()->zero()) throw Error("matrix group elements must be invertible");
  auto domain = std::make_shared<const MatrixDomain>(m.field(), m.dimension());
  std::vector<std::uint8_t> key(domain->width());
  domain->encode(m, key.data());
  return GroupElement(std::move(domain), std::move(key));
}

GroupElement make_tuple(const std::vector<GroupElement>& components) {
  std::vector<DomainPtr> domains;
  std::vector<std::uint8_t> key;
  for (const auto& c : components) {
    domains.push_back(c.domain_ptr());
    key.insert(key.end(), c.key().begin(), c.key().end());
  }
  return GroupElement(std::make_shared<const TupleDomain>(std::move(domains)), std::move(key));
}

GroupElement identity_like(const GroupElement& e) {
  std::vector<std::uint8_t> key(e.domain().width());
  e.domain().identity(key.data());
  return GroupElement(e.domain_ptr(), std::move(key));
}

std::vector<std::uint8_t> element_encode(const GroupElement& e) {
  std::vector<std::uint8_t> out;
  e.domain().append_encoding(e.key().data(), out);
  return out;
}

std::optional<Permutation> as_permutation(const GroupElement& e) {
  const auto* d = dynamic_cast<const PermutationDomain*>(&e.domain());
  if (d == nullptr) return std::nullopt;
  return d->decode(e.key().data());
}

std::optional<Matrix> as_matrix(const GroupElement& e) {
  const auto* d = dynamic_cast<const MatrixDomain*>(&e.domain());
  if (d == nullptr) return std::nullopt;
  return d->decode(e.key().data());
}

}  // namespace propr
