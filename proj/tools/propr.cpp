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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propr/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Normal subgroup lattices and Property R graphs of finite groups"};
  app.require_subcommand(1);

  std::string spec;
  propr::GraphOptions graph_opts;
  std::string variant;
  auto* graph = app.add_subcommand("graph", "Build the Property R graph of a group");
  graph->add_option("spec", spec, "Group, e.g. GL(2,7) or C2xS3")->required();
  graph->add_option("--dot", graph_opts.dot_path, "Write the graph in DOT format");
  graph->add_option("--json", graph_opts.json_path, "Write the graph document as JSON");
  graph->add_flag("--signature", graph_opts.signature, "Print the star signature");
  graph->add_option("--property-r", variant, "Print the Property R verdict")
      ->check(CLI::IsMember({"strict", "weak"}));
  graph->add_flag("--check", graph_opts.check, "Run the invariant suite");

  std::string family;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> qs;
  propr::TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Signatures for a matrix family over several fields");
  table->add_option("family", family, "GL, SL or PSL")->required();
  table->add_option("n", n, "Dimension")->required();
  table->add_option("q", qs, "Field orders")->required()->delimiter(',');
  table->add_flag("--json", table_opts.json, "JSON output");
  table->add_flag("--allow-large", table_opts.allow_large, "Raise the element cap");
  table->add_flag("--strict", table_opts.strict, "Exit 1 if any row is skipped");

  auto* check = app.add_subcommand("check", "Run the invariant suite on one group");
  check->add_option("spec", spec, "Group")->required();

  std::string signature;
  std::uint64_t max_order = 0;
  std::size_t max_factors = 3;
  auto* search = app.add_subcommand("search", "Find catalog groups with a given signature");
  search->add_option("signature", signature, "Signature, e.g. \"S0^2 S1\" or \"(S0 S2)^2\"")->required();
  search->add_option("--max-order", max_order, "Largest group order to scan")->required();
  search->add_option("--max-factors", max_factors, "Most atoms per direct product")
      ->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : propr::exit_user_error;
  }

  if (*graph) {
    if (variant == "strict") graph_opts.property_r = propr::PropertyRVariant::strict;
    if (variant == "weak") graph_opts.property_r = propr::PropertyRVariant::weak;
    return propr::cmd_graph(spec, graph_opts, std::cout, std::cerr);
  }
  if (*table) return propr::cmd_table(family, n, qs, table_opts, std::cout, std::cerr);
  if (*check) return propr::cmd_check(spec, std::cout, std::cerr);
  return propr::cmd_search(signature, max_order, max_factors, std::cout, std::cerr);
}
