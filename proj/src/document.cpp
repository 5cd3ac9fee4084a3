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

#include "propr/document.hpp"

#include <sstream>

#include "json.hpp"
#include "propr/errors.hpp"
#include "propr/signature.hpp"

namespace propr {

using ordered_json = nlohmann::ordered_json;

std::string hex_encoding(const GroupElement& e) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : element_encode(e)) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

namespace {

VerdictRecord record(const PropertyRVerdict& v) { return {v.holds, v.witness}; }

ordered_json verdict_json(const VerdictRecord& v) {
  ordered_json j;
  j["holds"] = v.holds;
  j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
  return j;
}

VerdictRecord verdict_from(const ordered_json& j) {
  VerdictRecord v;
  v.holds = j.at("holds").get<bool>();
  if (!j.at("witness").is_null()) v.witness = j.at("witness").get<std::size_t>();
  return v;
}

}  // namespace

GraphDocument make_document(std::string spec, const PropertyRGraph& graph) {
  GraphDocument doc;
  doc.spec = std::move(spec);
  const Group& g = *graph.group();
  doc.order = g.order();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const Subgroup& n = graph.lattice.node(i);
    NodeRecord node{i, n.order(), {}, n.is_normal()};
    for (ElementId x : n.generators()) node.generators.push_back(hex_encoding(g.element(x)));
    doc.nodes.push_back(std::move(node));
    doc.edges.push_back({i, graph.out_edge[i]});
    doc.self_loops.push_back(graph.self_loop[i]);
  }
  doc.signature = signature_to_string(star_decomposition(graph));
  doc.strict = record(property_r(graph, PropertyRVariant::strict));
  doc.weak = record(property_r(graph, PropertyRVariant::weak));
  return doc;
}

std::string emit_dot(const PropertyRGraph& graph, std::string_view title) {
  std::ostringstream out;
  out << "digraph \"";
  for (char c : title) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << "\" {\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out << "  N" << i << " [label=\"N" << i << " |" << graph.lattice.node(i).order() << "|\"];\n";
  }
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out << "  N" << i << " -> N" << graph.out_edge[i] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_json(const GraphDocument& doc) {
  ordered_json j;
  j["spec"] = doc.spec;
  j["order"] = doc.order;
  ordered_json nodes = ordered_json::array();
  for (const NodeRecord& n : doc.nodes) {
    ordered_json node;
    node["index"] = n.index;
    node["order"] = n.order;
    node["generators"] = n.generators;
    node["normal"] = n.normal;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : doc.edges) edges.push_back({e.from, e.to});
  j["edges"] = std::move(edges);
  j["self_loops"] = doc.self_loops;
  j["signature"] = doc.signature;
  ordered_json pr;
  pr["strict"] = verdict_json(doc.strict);
  pr["weak"] = verdict_json(doc.weak);
  j["property_r"] = std::move(pr);
  return j.dump(2) + "\n";
}

GraphDocument read_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    GraphDocument doc;
    doc.spec = j.at("spec").get<std::string>();
    doc.order = j.at("order").get<std::uint64_t>();
    for (const auto& n : j.at("nodes")) {
      doc.nodes.push_back({n.at("index").get<std::size_t>(), n.at("order").get<std::uint64_t>(),
                           n.at("generators").get<std::vector<std::string>>(),
                           n.at("normal").get<bool>()});
    }
    for (const auto& e : j.at("edges")) {
      doc.edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
    }
    doc.self_loops = j.at("self_loops").get<std::vector<bool>>();
    doc.signature = j.at("signature").get<std::string>();
    doc.strict = verdict_from(j.at("property_r").at("strict"));
    doc.weak = verdict_from(j.at("property_r").at("weak"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what(), 0);
  }
}

}  // namespace propr
