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

#include "propr/commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "propr/document.hpp"
#include "propr/errors.hpp"
#include "propr/invariants.hpp"
#include "propr/signature.hpp"

namespace propr {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw Error("cannot write " + path);
}

std::string verdict_line(const PropertyRGraph& graph, PropertyRVariant variant) {
  const PropertyRVerdict v = property_r(graph, variant);
  std::string line = std::string("property-r ") + (variant == PropertyRVariant::strict ? "strict" : "weak") +
                     ": " + (v.holds ? "true" : "false");
  if (v.witness) {
    line += " (witness N" + std::to_string(*v.witness) + ", order " +
            std::to_string(graph.lattice.node(*v.witness).order()) + ")";
  }
  return line;
}

// Runs `body`, mapping exceptions to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return exit_invariant_violation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_user_error;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_user_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_user_error;
  }
}

int report_checks(const InvariantReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks) {
    out << "check " << c.name << ": " << (c.passed ? "ok" : "FAIL " + c.detail) << "\n";
  }
  return report.ok() ? exit_ok : exit_invariant_violation;
}

}  // namespace

int cmd_graph(const std::string& spec, const GraphOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupSpec parsed = parse_group_spec(spec);
    const std::string name = to_string(parsed);
    const PropertyRGraph graph = build_graph(realize(parsed));
    if (options.dot_path) write_file(*options.dot_path, emit_dot(graph, name));
    if (options.json_path) write_file(*options.json_path, emit_json(make_document(name, graph)));

    const bool summary = !options.signature && !options.property_r;
    if (summary) {
      out << "group: " << name << "\n";
      out << "order: " << graph.group()->order() << "\n";
      out << "normal subgroups: " << graph.size() << "\n";
      out << "signature: " << signature_to_string(star_decomposition(graph)) << "\n";
      out << verdict_line(graph, PropertyRVariant::strict) << "\n";
      out << verdict_line(graph, PropertyRVariant::weak) << "\n";
    }
    if (options.signature) out << signature_to_string(star_decomposition(graph)) << "\n";
    if (options.property_r) out << verdict_line(graph, *options.property_r) << "\n";
    if (options.check) return report_checks(run_invariant_suite(graph), out);
    return exit_ok;
  });
}

std::vector<TableRow> compute_table(Family family, std::uint32_t n, const std::vector<std::uint32_t>& qs,
                                    std::size_t cap) {
  std::vector<TableRow> rows;
  for (std::uint32_t q : qs) {
    const Atom atom{family, n, q};
    const GroupSpec spec = parse_group_spec(to_string(atom));  // validates n and q
    TableRow row{to_string(spec), predicted_order(spec), std::nullopt, {}};
    if (row.order > cap) {
      row.note = "skipped: order exceeds element cap " + std::to_string(cap);
    } else {
      row.signature = star_decomposition(build_graph(realize(spec, cap)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_table(const std::string& family, std::uint32_t n, const std::vector<std::uint32_t>& qs,
              const TableOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Family f;
    std::string upper;
    for (char c : family) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "GL") {
      f = Family::general_linear;
    } else if (upper == "SL") {
      f = Family::special_linear;
    } else if (upper == "PSL") {
      f = Family::projective_special_linear;
    } else {
      throw Error("table family must be GL, SL or PSL, got '" + family + "'");
    }
    const std::size_t cap = options.allow_large ? std::max(element_cap(), large_element_cap) : element_cap();
    const std::vector<TableRow> rows = compute_table(f, n, qs, cap);
    bool skipped = false;
    if (options.json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const TableRow& r : rows) {
        nlohmann::ordered_json row;
        row["spec"] = r.spec;
        row["order"] = r.order;
        row["signature"] = r.signature ? nlohmann::ordered_json(signature_to_string(*r.signature))
                                       : nlohmann::ordered_json(nullptr);
        row["skipped"] = !r.signature.has_value();
        if (!r.note.empty()) row["note"] = r.note;
        j.push_back(std::move(row));
      }
      out << j.dump(2) << "\n";
    }
    for (const TableRow& r : rows) {
      skipped = skipped || !r.signature;
      if (options.json) continue;
      out << r.spec << "\t" << r.order << "\t" << (r.signature ? signature_to_string(*r.signature) : r.note)
          << "\n";
    }
    return skipped && options.strict ? exit_user_error : exit_ok;
  });
}

int cmd_check(const std::string& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupSpec parsed = parse_group_spec(spec);
    const PropertyRGraph graph = build_graph(realize(parsed));
    out << "group: " << to_string(parsed) << " (order " << graph.group()->order() << ", "
        << graph.size() << " normal subgroups)\n";
    return report_checks(run_invariant_suite(graph), out);
  });
}

SearchResult search_signature(const StarSignature& target, std::uint64_t max_order, std::size_t max_factors) {
  SearchResult result;
  if (target.has_isolated_point()) {
    result.unrealizable = true;
    return result;
  }
  catalog_enumerate(max_order, max_factors, [&](const GroupSpec& spec, const GroupPtr& g) {
    ++result.scanned;
    if (star_decomposition(build_graph(g)) == target) result.matches.push_back(spec);
  });
  return result;
}

int cmd_search(const std::string& signature, std::uint64_t max_order, std::size_t max_factors,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StarSignature target = parse_signature(signature);
    if (max_order > element_cap()) {
      throw Error("max order " + std::to_string(max_order) + " exceeds element cap " +
                  std::to_string(element_cap()));
    }
    const SearchResult r = search_signature(target, max_order, max_factors);
    if (r.unrealizable) {
      out << signature_to_string(target) << " is unrealizable by any computed graph: Q(G, N) is defined "
          << "for every normal subgroup, so every vertex has an out-edge and no vertex is isolated\n";
      out << "scanned 0 groups, 0 matches\n";
      return exit_ok;
    }
    for (const GroupSpec& spec : r.matches) out << to_string(spec) << "\t" << predicted_order(spec) << "\n";
    out << "scanned " << r.scanned << " groups, " << r.matches.size()
        << (r.matches.size() == 1 ? " match" : " matches") << "\n";
    return exit_ok;
  });
}

}  // namespace propr
