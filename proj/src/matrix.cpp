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

#include "propr/matrix.hpp"

#include <utility>

#include "propr/errors.hpp"

namespace propr {

namespace kernel {

void mat_mul(const FiniteField& f, std::uint32_t n, const std::uint32_t* a, const std::uint32_t* b,
             std::uint32_t* out) noexcept {
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t t = 0; t < n; ++t) {
        acc = f.add_raw(acc, f.mul_raw(a[i * n + t], b[t * n + j]));
      }
      out[i * n + j] = acc;
    }
  }
}

bool mat_inv(const FiniteField& f, std::uint32_t n, const std::uint32_t* a, std::uint32_t* out) {
  std::vector<FieldElement> work(a, a + n * n);
  std::vector<FieldElement> inv(n * n, f.zero());
  for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = f.one();

  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && work[pivot * n + col] == f.zero()) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(work[pivot * n + j], work[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const FieldElement scale = f.inv(work[col * n + col]);
    for (std::uint32_t j = 0; j < n; ++j) {
      work[col * n + j] = f.mul(work[col * n + j], scale);
      inv[col * n + j] = f.mul(inv[col * n + j], scale);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || work[r * n + col] == f.zero()) continue;
      const FieldElement factor = work[r * n + col];
      for (std::uint32_t j = 0; j < n; ++j) {
        work[r * n + j] = f.sub(work[r * n + j], f.mul(factor, work[col * n + j]));
        inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
      }
    }
  }
  for (std::uint32_t i = 0; i < n * n; ++i) out[i] = inv[i].value;
  return true;
}

std::uint32_t mat_det(const FiniteField& f, std::uint32_t n, const std::uint32_t* a) {
  std::vector<FieldElement> work(a, a + n * n);
  FieldElement det = f.one();
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && work[pivot * n + col] == f.zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(work[pivot * n + j], work[col * n + j]);
      det = f.neg(det);
    }
    const FieldElement p = work[col * n + col];
    det = f.mul(det, p);
    const FieldElement pinv = f.inv(p);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const FieldElement factor = f.mul(work[r * n + col], pinv);
      if (factor == f.zero()) continue;
      for (std::uint32_t j = col; j < n; ++j) {
        work[r * n + j] = f.sub(work[r * n + j], f.mul(factor, work[col * n + j]));
      }
    }
  }
  return det.value;
}

}  // namespace kernel

namespace {

std::vector<std::uint32_t> raw(const Matrix& m) {
  std::vector<std::uint32_t> out;
  out.reserve(m.entries().size());
  for (FieldElement e : m.entries()) out.push_back(e.value);
  return out;
}

Matrix from_raw(const FieldPtr& field, std::uint32_t n, const std::vector<std::uint32_t>& v) {
  std::vector<FieldElement> entries;
  entries.reserve(v.size());
  for (std::uint32_t x : v) entries.push_back({x});
  return Matrix(field, n, std::move(entries));
}

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.dimension() != b.dimension() || !(*a.field() == *b.field())) {
    throw Error("matrix dimension or field mismatch");
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::uint32_t n)
    : field_(std::move(field)), n_(n), entries_(std::size_t{n} * n, FieldElement{0}) {}

Matrix::Matrix(FieldPtr field, std::uint32_t n, std::vector<FieldElement> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != std::size_t{n} * n) throw Error("matrix entry count does not match dimension");
  for (FieldElement e : entries_) {
    if (e.value >= field_->order()) throw Error("matrix entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::uint32_t n) {
  Matrix m(std::move(field), n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, FieldElement{1});
  return m;
}

Matrix Matrix::transvection(FieldPtr field, std::uint32_t n, std::uint32_t row, std::uint32_t col,
                            FieldElement value) {
  if (row == col || row >= n || col >= n) throw Error("transvection needs distinct in-range indices");
  Matrix m = identity(std::move(field), n);
  m.set(row, col, value);
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, const std::vector<FieldElement>& diag) {
  const auto n = static_cast<std::uint32_t>(diag.size());
  Matrix m(std::move(field), n);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, diag[i]);
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  return n_ == other.n_ && *field_ == *other.field_ && entries_ == other.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  const std::uint32_t n = a.dimension();
  const auto ra = raw(a);
  const auto rb = raw(b);
  std::vector<std::uint32_t> out(std::size_t{n} * n);
  kernel::mat_mul(*a.field(), n, ra.data(), rb.data(), out.data());
  return from_raw(a.field(), n, out);
}

Matrix mat_inv(const Matrix& a) {
  const std::uint32_t n = a.dimension();
  const auto ra = raw(a);
  std::vector<std::uint32_t> out(std::size_t{n} * n);
  if (!kernel::mat_inv(*a.field(), n, ra.data(), out.data())) throw Error("matrix is singular");
  return from_raw(a.field(), n, out);
}

FieldElement mat_det(const Matrix& a) {
  const auto ra = raw(a);
  return {kernel::mat_det(*a.field(), a.dimension(), ra.data())};
}

}  // namespace propr
