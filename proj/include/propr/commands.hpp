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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "propr/catalog.hpp"
#include "propr/property_r.hpp"

namespace propr {

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_user_error = 1;
inline constexpr int exit_invariant_violation = 2;

/// Element cap used by --allow-large.
inline constexpr std::size_t large_element_cap = 40'000'000;

struct GraphOptions {
  std::optional<std::string> dot_path;
  std::optional<std::string> json_path;
  bool signature = false;
  std::optional<PropertyRVariant> property_r;
  bool check = false;
};

int cmd_graph(const std::string& spec, const GraphOptions& options, std::ostream& out, std::ostream& err);

struct TableRow {
  std::string spec;
  std::uint64_t order = 0;
  std::optional<StarSignature> signature;  // empty when skipped
  std::string note;
};

/// One row per q. Rows whose predicted order exceeds the cap are skipped.
std::vector<TableRow> compute_table(Family family, std::uint32_t n, const std::vector<std::uint32_t>& qs,
                                    std::size_t cap);

struct TableOptions {
  bool json = false;
  bool allow_large = false;
  bool strict = false;
};

/// `family` is a matrix family name: GL, SL or PSL.
int cmd_table(const std::string& family, std::uint32_t n, const std::vector<std::uint32_t>& qs,
              const TableOptions& options, std::ostream& out, std::ostream& err);

int cmd_check(const std::string& spec, std::ostream& out, std::ostream& err);

struct SearchResult {
  std::vector<GroupSpec> matches;
  std::size_t scanned = 0;
  bool unrealizable = false;
};

SearchResult search_signature(const StarSignature& target, std::uint64_t max_order,
                              std::size_t max_factors = 3);

int cmd_search(const std::string& signature, std::uint64_t max_order, std::size_t max_factors,
               std::ostream& out, std::ostream& err);

}  // namespace propr
