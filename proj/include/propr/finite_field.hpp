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

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace propr {

/// An element of GF(p^k), stored as the integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1}
/// of its residue vector. The integer is also its canonical encoding.
struct FieldElement {
  std::uint32_t value = 0;

  auto operator<=>(const FieldElement&) const = default;
};

/**
 * GF(p^k) with p^k <= 2^16.
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial of
 * degree k, comparing coefficients from the constant term upwards. For k = 1
 * the modulus is the placeholder x and arithmetic is plain mod p.
 *
 * Multiplication goes through discrete log tables built from the primitive
 * element; addition in extension fields uses a table for small q and digit-wise
 * arithmetic otherwise.
 */
class FiniteField {
 public:
  static constexpr std::uint32_t max_order = 1u << 16;

  /// Throws propr::Error if p is not prime, k < 1, or p^k exceeds max_order.
  static std::shared_ptr<const FiniteField> make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Coefficients of the modulus, constant term first, length k + 1, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  FieldElement inv(FieldElement a) const;  // throws on zero
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// Smallest element (by encoding) of multiplicative order q - 1.
  FieldElement primitive_element() const noexcept { return primitive_; }

  /// Multiplicative order, found by repeated multiplication. Zero has order 0.
  std::uint32_t multiplicative_order(FieldElement a) const noexcept;

  bool operator==(const FiniteField& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  // Raw-integer fast paths used by the matrix kernels.
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t l = log_[a] + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
  }

 private:
  FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_digits(std::uint32_t a) const noexcept;
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement primitive_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(std::uint64_t n) noexcept;

/// If q = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept;

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace propr
