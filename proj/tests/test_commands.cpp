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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "propr/catalog.hpp"
#include "propr/commands.hpp"
#include "propr/invariants.hpp"
#include "propr/signature.hpp"

using namespace propr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run graph_cmd(const std::string& spec, const GraphOptions& opts = {}) {
  std::ostringstream out, err;
  const int code = cmd_graph(spec, opts, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("graph command") {
  GraphOptions sig;
  sig.signature = true;
  CHECK(graph_cmd("GL(3,2)", sig).out == "S1\n");

  GraphOptions pr;
  pr.property_r = PropertyRVariant::strict;
  const Run a5 = graph_cmd("A5", pr);
  CHECK(a5.code == exit_ok);
  CHECK(a5.out == "property-r strict: false (witness N0, order 1)\n");

  const Run bad = graph_cmd("GL(2,6)");
  CHECK(bad.code == exit_user_error);
  CHECK(bad.err.find("not a prime power") != std::string::npos);

  const Run summary = graph_cmd("Q8");
  CHECK(summary.out.find("signature: S0^4 S1\n") != std::string::npos);
  CHECK(summary.out.find("property-r weak: true") != std::string::npos);
}

TEST_CASE("graph command writes files and runs the checks") {
  const auto dir = std::filesystem::temp_directory_path() / "propr_unit_cmd";
  std::filesystem::create_directories(dir);
  GraphOptions opts;
  opts.dot_path = (dir / "s4.dot").string();
  opts.json_path = (dir / "s4.json").string();
  opts.check = true;
  const Run r = graph_cmd("S4", opts);
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(read_file(dir / "s4.dot").find("N3 [label=\"N3 |24|\"]") != std::string::npos);
  CHECK(read_file(dir / "s4.json").find("\"signature\": \"S0 S2\"") != std::string::npos);

  opts.dot_path = (dir / "missing" / "x.dot").string();
  opts.check = false;
  CHECK(graph_cmd("S4", opts).code == exit_user_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("table command") {
  const auto rows = compute_table(Family::general_linear, 3, {2}, element_cap());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].spec == "GL(3,2)");
  CHECK(rows[0].order == 168);
  CHECK(signature_to_string(*rows[0].signature) == "S1");

  const auto capped = compute_table(Family::general_linear, 2, {3, 5}, 100);
  CHECK(capped[0].signature.has_value());
  CHECK_FALSE(capped[1].signature.has_value());
  CHECK(capped[1].note.find("skipped") == 0);

  std::ostringstream out, err;
  CHECK(cmd_table("gl", 2, {3, 7}, {}, out, err) == exit_ok);
  CHECK(out.str() == "GL(2,3)\t48\tS0 S3\nGL(2,7)\t2016\tS0^2 S2^2\n");

  std::ostringstream json, err2;
  TableOptions jopts;
  jopts.json = true;
  CHECK(cmd_table("SL", 2, {3}, jopts, json, err2) == exit_ok);
  CHECK(json.str().find("\"signature\": \"S0 S2\"") != std::string::npos);

  std::ostringstream o3, e3;
  CHECK(cmd_table("XL", 2, {5}, {}, o3, e3) == exit_user_error);
  CHECK(cmd_table("GL", 2, {6}, {}, o3, e3) == exit_user_error);
}

TEST_CASE("table rows above the cap are skipped, strict mode fails") {
  std::ostringstream out, err;
  TableOptions opts;
  CHECK(cmd_table("GL", 3, {7}, opts, out, err) == exit_ok);
  CHECK(out.str().find("skipped") != std::string::npos);
  opts.strict = true;
  std::ostringstream out2, err2;
  CHECK(cmd_table("GL", 3, {7}, opts, out2, err2) == exit_user_error);
}

TEST_CASE("search command") {
  const SearchResult s1 = search_signature(parse_signature("S1"), 60);
  REQUIRE_FALSE(s1.matches.empty());
  for (const GroupSpec& g : s1.matches) CHECK(predicted_order(g) == 60);
  CHECK(to_string(s1.matches.front()) == "A5");

  const SearchResult s00 = search_signature(parse_signature("S0^2"), 10);
  std::vector<std::string> names;
  for (const GroupSpec& g : s00.matches) names.push_back(to_string(g));
  CHECK(names == std::vector<std::string>{"C2", "C3", "C5", "C7"});

  std::ostringstream out, err;
  CHECK(cmd_search("S-1", 100, 3, out, err) == exit_ok);
  CHECK(out.str().find("unrealizable by any computed graph") != std::string::npos);
  CHECK(out.str().find("0 matches") != std::string::npos);

  std::ostringstream o2, e2;
  CHECK(cmd_search("S^", 10, 3, o2, e2) == exit_user_error);
}

TEST_CASE("invariant suite passes on catalog groups") {
  for (const GroupSpec& spec : catalog_specs(48, 2)) {
    const InvariantReport r = run_invariant_suite(build_graph(realize(spec)));
    CAPTURE(to_string(spec));
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("check command") {
  std::ostringstream out, err;
  CHECK(cmd_check("GL(2,3)", out, err) == exit_ok);
  CHECK(out.str().find("check q-oracle: ok") != std::string::npos);
  std::ostringstream o2, e2;
  CHECK(cmd_check("X9", o2, e2) == exit_user_error);
}
