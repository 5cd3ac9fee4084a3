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
#include <vector>

#include "propr/finite_field.hpp"

namespace propr {

/// Square matrix over a finite field, entries row-major.
class Matrix {
 public:
  Matrix(FieldPtr field, std::uint32_t n);  // zero matrix
  Matrix(FieldPtr field, std::uint32_t n, std::vector<FieldElement> entries);

  static Matrix identity(FieldPtr field, std::uint32_t n);
  /// Identity plus `value` at (row, col), row != col.
  static Matrix transvection(FieldPtr field, std::uint32_t n, std::uint32_t row,
                             std::uint32_t col, FieldElement value);
  static Matrix diagonal(FieldPtr field, const std::vector<FieldElement>& diag);

  std::uint32_t dimension() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  FieldElement at(std::uint32_t row, std::uint32_t col) const { return entries_[row * n_ + col]; }
  void set(std::uint32_t row, std::uint32_t col, FieldElement v) { entries_[row * n_ + col] = v; }
  std::span<const FieldElement> entries() const noexcept { return entries_; }

  bool operator==(const Matrix& other) const;

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::vector<FieldElement> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Gauss-Jordan elimination; throws propr::Error on a singular matrix.
Matrix mat_inv(const Matrix& a);
FieldElement mat_det(const Matrix& a);

namespace kernel {

// Row-major n x n products on raw field integers; used by the group engine.
void mat_mul(const FiniteField& f, std::uint32_t n, const std::uint32_t* a, const std::uint32_t* b,
             std::uint32_t* out) noexcept;
// Returns false if singular.
bool mat_inv(const FiniteField& f, std::uint32_t n, const std::uint32_t* a, std::uint32_t* out);
std::uint32_t mat_det(const FiniteField& f, std::uint32_t n, const std::uint32_t* a);

}  // namespace kernel

}  // namespace propr
