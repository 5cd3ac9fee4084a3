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

// Slow reference implementations used only by the tests. They share nothing
// with the library beyond element multiplication.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "propr/group.hpp"

namespace oracle {

using propr::ElementId;
using propr::Group;

/// Sorted member list of the subgroup generated by `seed`.
std::vector<ElementId> closure(const Group& g, const std::vector<ElementId>& seed);

/// Every subgroup of g as a sorted member list, in no particular order.
std::vector<std::vector<ElementId>> all_subgroups(const Group& g);

/// Subgroups fixed by conjugation with every element.
std::vector<std::vector<ElementId>> normal_subgroups(const Group& g);

/// Subgroup generated by all commutators x y x^-1 y^-1.
std::vector<ElementId> derived_subgroup(const Group& g);

/// Order of the group generated by the elements, by breadth-first search over
/// keys held in a std::set.
std::size_t generated_order(const std::vector<propr::GroupElement>& generators);

/// Coefficients low to high, leading coefficient last. Trial division by all
/// monic polynomials of degree 1..deg/2.
bool irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

std::uint64_t gl_order(std::uint32_t n, std::uint64_t q);
std::uint64_t sl_order(std::uint32_t n, std::uint64_t q);
std::uint64_t psl_order(std::uint32_t n, std::uint64_t q);

/// Star sizes read off a functional digraph, or nullopt if some component is
/// not a looped star.
std::optional<std::vector<int>> star_sizes(const std::vector<std::size_t>& out_edge);

/// Element order -> number of elements of that order.
std::map<std::uint64_t, std::size_t> order_statistics(const Group& g);
std::map<std::uint64_t, std::size_t> cyclic_product_statistics(const std::vector<std::uint64_t>& moduli);

}  // namespace oracle
