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

#include "propr/finite_field.hpp"

#include <string>

#include "propr/errors.hpp"

namespace propr {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint32_t count = ipow(p, d);
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1, 0);
      std::uint32_t rest = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        divisor[i] = rest % p;
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order) throw Error("field order exceeds 2^16");
  }
  Poly modulus(k + 1, 0);
  modulus[k] = 1;
  if (k > 1) {
    // Low-degree coefficient is the most significant digit of the search order.
    const std::uint32_t count = static_cast<std::uint32_t>(q);
    bool found = false;
    for (std::uint32_t idx = 0; idx < count && !found; ++idx) {
      std::uint32_t rest = idx;
      for (std::uint32_t i = k; i-- > 0;) {
        modulus[i] = rest % p;
        rest /= p;
      }
      found = is_irreducible(modulus, p);
    }
    if (!found) throw InvariantViolation("no irreducible polynomial found");
  }
  return std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(modulus)));
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, Poly modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  if (k_ > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
      }
    }
  }

  auto order_of = [this](std::uint32_t a) {
    std::uint32_t x = a;
    std::uint32_t n = 1;
    while (x != 1) {
      x = k_ == 1 ? mul_raw(x, a) : poly_mul(x, a);
      ++n;
    }
    return n;
  };
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (order_of(a) == q_ - 1) {
      primitive_ = {a};
      break;
    }
  }

  if (k_ > 1) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = poly_mul(x, primitive_.value);
    }
  }
}

std::uint32_t FiniteField::add_digits(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FiniteField::neg_digits(std::uint32_t a) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t d = (p_ - a % p_) % p_;
    r += d * place;
    place *= p_;
    a /= p_;
  }
  return r;
}

std::uint32_t FiniteField::poly_mul(std::uint32_t a, std::uint32_t b) const {
  const Poly ca = coefficients({a});
  const Poly cb = coefficients({b});
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r).value;
}

FieldElement FiniteField::from_coefficients(const Poly& coeffs) const {
  if (coeffs.size() > k_) throw Error("too many coefficients for field element");
  std::uint32_t v = 0;
  std::uint32_t place = 1;
  for (std::uint32_t c : coeffs) {
    if (c >= p_) throw Error("coefficient out of range");
    v += c * place;
    place *= p_;
  }
  return {v};
}

Poly FiniteField::coefficients(FieldElement a) const {
  Poly c(k_, 0);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const noexcept {
  return {add_raw(a.value, b.value)};
}

FieldElement FiniteField::neg(FieldElement a) const noexcept {
  if (k_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
  return {neg_digits(a.value)};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const noexcept {
  return {mul_raw(a.value, b.value)};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) throw Error("division by zero in finite field");
  if (k_ == 1) return pow(a, p_ - 2);
  const std::uint32_t l = log_[a.value];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

std::uint32_t FiniteField::multiplicative_order(FieldElement a) const noexcept {
  if (a.value == 0) return 0;
  std::uint32_t n = 1;
  for (FieldElement x = a; x != one(); x = mul(x, a)) ++n;
  return n;
}

}  // namespace propr
