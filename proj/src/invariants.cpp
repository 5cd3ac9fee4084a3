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

#include "propr/invariants.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "propr/errors.hpp"

namespace propr {

bool InvariantReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* InvariantReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

using Failure = std::optional<std::string>;

std::string vertex(std::size_t i) { return "N" + std::to_string(i); }

Failure lagrange(const PropertyRGraph& t) {
  const std::size_t order = t.group()->order();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (order % t.lattice.node(i).order() != 0) return vertex(i) + " order does not divide |G|";
  }
  return std::nullopt;
}

Failure lattice_contents(const PropertyRGraph& t) {
  const NormalLattice& l = t.lattice;
  if (l.node(l.trivial_index()).order() != 1) return "first node is not trivial";
  if (l.node(l.whole_index()).order() != t.group()->order()) return "last node is not G";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!l.node(i).is_normal()) return vertex(i) + " is not normal";
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l.leq(i, j) != l.node(i).is_subset_of(l.node(j))) return "inclusion table wrong at " + vertex(i);
      if (i < j && l.node(i) == l.node(j)) return vertex(i) + " duplicated";
    }
  }
  // every normal closure of a single element is a node
  const GroupPtr& g = t.group();
  for (const auto& c : conjugacy_classes(g).classes) {
    const ElementId x = c.representative;
    if (!l.find(normal_closure(g, std::span<const ElementId>(&x, 1)))) {
      return "normal closure of " + g->element(x).to_string() + " missing";
    }
  }
  return std::nullopt;
}

Failure join_closure(const PropertyRGraph& t) {
  const NormalLattice& l = t.lattice;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      const std::size_t k = l.join_index(i, j);
      const Subgroup& a = l.node(i);
      const Subgroup& b = l.node(j);
      const std::size_t meet = a.members().intersection_count(b.members());
      if (!l.leq(i, k) || !l.leq(j, k) || l.node(k).order() * meet != a.order() * b.order()) {
        return "join of " + vertex(i) + " and " + vertex(j);
      }
    }
  }
  return std::nullopt;
}


Failure q_agreement(const PropertyRGraph& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t oracle = q_oracle(t.lattice, i);
    if (oracle != t.out_edge[i]) {
      return "Q(G, " + vertex(i) + "): join gives " + vertex(t.out_edge[i]) + ", quotient gives " +
             vertex(oracle);
    }
  }
  return std::nullopt;
}

Failure contained_in_q(const PropertyRGraph& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.lattice.leq(i, t.out_edge[i])) return vertex(i) + " not inside Q(G, N)";
  }
  return std::nullopt;
}

Failure self_loops(const PropertyRGraph& t) {
  const std::size_t d = t.lattice.derived_index();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool abelian = is_abelian(*quotient_group(t.group(), t.lattice.node(i)).group);
    const bool above = t.lattice.leq(d, i);
    if (t.self_loop[i] != abelian || abelian != above) {
      return vertex(i) + ": loop " + std::to_string(t.self_loop[i]) + ", abelian quotient " +
             std::to_string(abelian) + ", contains G' " + std::to_string(above);
    }
  }
  return std::nullopt;
}

Failure star_shape(const PropertyRGraph& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    const std::size_t b = t.out_edge[a];
    const std::size_t c = t.out_edge[b];
    if (a != b && b != c && a != c) return "path " + vertex(a) + " -> " + vertex(b) + " -> " + vertex(c);
  }
  star_decomposition(t);
  return std::nullopt;
}

Failure signature_accounting(const PropertyRGraph& t) {
  const StarSignature s = star_decomposition(t);
  if (s.vertex_count() != t.size()) return "signature covers " + std::to_string(s.vertex_count()) + " vertices";
  std::size_t above = 0;
  for (std::size_t i = 0; i < t.size(); ++i) above += t.lattice.leq(t.lattice.derived_index(), i);
  if (s.star_count() != above) return "star count " + std::to_string(s.star_count()) + " vs " + std::to_string(above);
  return std::nullopt;
}

Failure h1_edges(const PropertyRGraph& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!h1_edge_check(t, {i, t.out_edge[i]})) return "edge from " + vertex(i);
  }
  return std::nullopt;
}

std::vector<Automorphism> inner_by_generators(const GroupPtr& g) {
  std::vector<Automorphism> out;
  for (ElementId x : g->generators()) out.push_back(Automorphism::inner(g, x));
  return out;
}

Failure automorphism_action(const PropertyRGraph& t, std::span<const Automorphism> auts,
                            bool inner) {
  for (const Automorphism& phi : auts) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Edge e{i, t.out_edge[i]};
      const Edge image = automorphism_edge_action(t, phi, e);
      if (inner && image != e) return "inner automorphism moves the edge from " + vertex(i);
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!edge_stabilizer_check(t, auts, i)) return "edge stabilizer differs at " + vertex(i);
  }
  return std::nullopt;
}

Failure witnesses_perfect(const PropertyRGraph& t) {
  for (auto variant : {PropertyRVariant::strict, PropertyRVariant::weak}) {
    const PropertyRVerdict v = property_r(t, variant);
    if (v.holds == v.witness.has_value()) return "verdict and witness disagree";
    if (v.witness && t.out_edge[*v.witness] != t.lattice.whole_index()) {
      return "witness " + vertex(*v.witness) + " has Q(G, N) != G";
    }
  }
  return std::nullopt;
}

}  // namespace

InvariantReport run_invariant_suite(const PropertyRGraph& graph, std::span<const Automorphism> extra) {
  InvariantReport report;
  auto run = [&](std::string name, const std::function<Failure()>& check) {
    CheckResult r{std::move(name), true, {}};
    try {
      if (Failure f = check()) {
        r.passed = false;
        r.detail = *f;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  };
  const std::vector<Automorphism> inner = inner_by_generators(graph.group());
  run("lagrange", [&] { return lagrange(graph); });
  run("lattice-contents", [&] { return lattice_contents(graph); });
  run("join-closure", [&] { return join_closure(graph); });
  run("q-oracle", [&] { return q_agreement(graph); });
  run("n-inside-q", [&] { return contained_in_q(graph); });
  run("self-loops", [&] { return self_loops(graph); });
  run("star-shape", [&] { return star_shape(graph); });
  run("signature-accounting", [&] { return signature_accounting(graph); });
  run("h1-edges", [&] { return h1_edges(graph); });
  run("inner-automorphisms", [&] { return automorphism_action(graph, inner, true); });
  if (!extra.empty()) {
    run("supplied-automorphisms", [&] { return automorphism_action(graph, extra, false); });
  }
  run("property-r-witness", [&] { return witnesses_perfect(graph); });
  return report;
}

}  // namespace propr
