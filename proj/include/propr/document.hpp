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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propr/property_r.hpp"

namespace propr {

struct NodeRecord {
  std::size_t index = 0;
  std::uint64_t order = 0;
  std::vector<std::string> generators;  // hex element encodings
  bool normal = true;

  bool operator==(const NodeRecord&) const = default;
};

struct VerdictRecord {
  bool holds = true;
  std::optional<std::size_t> witness;

  bool operator==(const VerdictRecord&) const = default;
};

/// Serializable snapshot of a Property R graph.
struct GraphDocument {
  std::string spec;
  std::uint64_t order = 0;
  std::vector<NodeRecord> nodes;
  std::vector<Edge> edges;
  std::vector<bool> self_loops;
  std::string signature;
  VerdictRecord strict;
  VerdictRecord weak;

  bool operator==(const GraphDocument&) const = default;
};

GraphDocument make_document(std::string spec, const PropertyRGraph& graph);

std::string hex_encoding(const GroupElement& e);

/// Nodes labeled "N<i> |<order>|" in lattice order, one arc per vertex.
std::string emit_dot(const PropertyRGraph& graph, std::string_view title = {});

/// Fixed key order, two-space indent, trailing newline.
std::string emit_json(const GraphDocument& doc);

/// Throws ParseError on malformed JSON or missing fields.
GraphDocument read_json(std::string_view text);

}  // namespace propr
