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

#include <vector>

#include "doctest.h"
#include "propr/errors.hpp"
#include "propr/finite_field.hpp"
#include "support/oracles.hpp"

using namespace propr;

namespace {

// Schoolbook product of residue vectors, reduced by the monic modulus.
std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const std::size_t k = mod.size() - 1;
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * mod[i] % p) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace

TEST_CASE("prime fields agree with modular integers") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    const auto f = FiniteField::make(p, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f->add({a}, {b}).value == (a + b) % p);
        CHECK(f->mul({a}, {b}).value == (a * b) % p);
        CHECK(f->sub({a}, {b}).value == (a + p - b) % p);
      }
    }
  }
}

TEST_CASE("extension field moduli are monic irreducible") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {2u, 5u}}) {
    const auto f = FiniteField::make(p, k);
    const auto& m = f->modulus();
    REQUIRE(m.size() == k + 1);
    CHECK(m.back() == 1);
    CHECK(oracle::irreducible(m, p));
    CHECK(is_irreducible(m, p));
  }
}

TEST_CASE("library irreducibility test matches trial division") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t deg = 1; deg <= 4; ++deg) {
      std::vector<std::uint32_t> poly(deg + 1, 0);
      poly[deg] = 1;
      while (true) {
        CHECK(is_irreducible(poly, p) == oracle::irreducible(poly, p));
        std::size_t i = 0;
        while (i < deg && ++poly[i] == p) poly[i++] = 0;
        if (i == deg) break;
      }
    }
  }
}

TEST_CASE("extension field multiplication matches polynomial arithmetic") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    const auto f = FiniteField::make(p, k);
    const std::uint32_t q = f->order();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto ca = f->coefficients({a});
        const auto cb = f->coefficients({b});
        CHECK(f->coefficients(f->mul({a}, {b})) == poly_mul_mod(ca, cb, f->modulus(), p));
        std::vector<std::uint32_t> sum(k);
        for (std::uint32_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
        CHECK(f->coefficients(f->add({a}, {b})) == sum);
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively in GF(9)") {
  const auto f = FiniteField::make(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) {
    if (a != 0) CHECK(f->mul({a}, f->inv({a})) == f->one());
    CHECK(f->add({a}, f->neg({a})) == f->zero());
    for (std::uint32_t b = 0; b < 9; ++b) {
      for (std::uint32_t c = 0; c < 9; ++c) {
        CHECK(f->mul(f->mul({a}, {b}), {c}) == f->mul({a}, f->mul({b}, {c})));
        CHECK(f->mul({a}, f->add({b}, {c})) == f->add(f->mul({a}, {b}), f->mul({a}, {c})));
      }
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u, 13u, 16u, 25u, 27u, 49u, 121u}) {
    const auto [p, k] = prime_power(q);
    const auto f = FiniteField::make(p, k);
    CHECK(f->multiplicative_order(f->primitive_element()) == q - 1);
    CHECK(f->pow(f->primitive_element(), q - 1) == f->one());
  }
}

TEST_CASE("prime powers") {
  CHECK(prime_power(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK(prime_power(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
  CHECK(prime_power(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
  CHECK(prime_power(6).first == 0);
  CHECK(prime_power(1).first == 0);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(FiniteField::make(6, 1), Error);
  CHECK_THROWS_AS(FiniteField::make(2, 0), Error);
  CHECK_THROWS_AS(FiniteField::make(2, 17), Error);
  CHECK_THROWS_AS(FiniteField::make(5, 1)->inv({0}), Error);
}
