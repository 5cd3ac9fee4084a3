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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "propr/group.hpp"

namespace propr {

enum class Family : std::uint8_t {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  quaternion,
  general_linear,
  special_linear,
  projective_special_linear,
};

/// One named group. `n` is the family parameter (degree, dimension, ...); `q`
/// is the field order for matrix families and 0 otherwise.
struct Atom {
  Family family;
  std::uint32_t n = 0;
  std::uint32_t q = 0;

  auto operator<=>(const Atom&) const = default;
};

/// Direct product of atoms.
struct GroupSpec {
  std::vector<Atom> atoms;

  bool operator==(const GroupSpec&) const = default;
};

/**
 * Grammar, case- and whitespace-insensitive:
 *
 *   spec := atom ("x" atom)*
 *   atom := NAME "(" INT ("," INT)* ")" | NAME INT | NAME
 *
 * with NAME one of C, D, S, A, Q8, GL, SL, PSL. Dn is the dihedral group of
 * order 2n. Throws ParseError (with position) or propr::Error for invalid
 * parameters such as a non-prime-power field order.
 */
GroupSpec parse_group_spec(std::string_view text);

std::string to_string(const Atom& atom);
/// Atoms joined by "x", e.g. "C2xGL(2,3)".
std::string to_string(const GroupSpec& spec);
/// Sorted atoms with trivial factors dropped (C1 itself stays when alone).
GroupSpec normal_form(GroupSpec spec);

std::uint64_t predicted_order(const Atom& atom);
std::uint64_t predicted_order(const GroupSpec& spec);

/// Builds generators and enumerates. Matrix families check their order
/// against the classical formulas and throw InvariantViolation on mismatch.
GroupPtr realize(const Atom& atom, std::size_t cap = element_cap());
GroupPtr realize(const GroupSpec& spec, std::size_t cap = element_cap());

/// Atoms of order <= max_order, then products of 2..max_factors nontrivial
/// atoms, each product listed once as a sorted spec.
std::vector<GroupSpec> catalog_specs(std::uint64_t max_order, std::size_t max_factors = 3);

/// Streams catalog_specs(max_order, max_factors) with realized groups.
void catalog_enumerate(std::uint64_t max_order, std::size_t max_factors,
                       const std::function<void(const GroupSpec&, const GroupPtr&)>& visit);

}  // namespace propr
