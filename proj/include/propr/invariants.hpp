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

#include <span>
#include <string>
#include <vector>

#include "propr/property_r.hpp"

namespace propr {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty on success
};

struct InvariantReport {
  std::vector<CheckResult> checks;

  bool ok() const noexcept;
  const CheckResult* find(std::string_view name) const noexcept;
};

/// Structural checks on a computed graph. `extra` automorphisms are checked
/// alongside the inner automorphisms by the group generators.
InvariantReport run_invariant_suite(const PropertyRGraph& graph,
                                    std::span<const Automorphism> extra = {});

}  // namespace propr
