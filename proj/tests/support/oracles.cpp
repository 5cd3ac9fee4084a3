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

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace oracle {

std::vector<ElementId> closure(const Group& g, const std::vector<ElementId>& seed) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> out{Group::identity()};
  seen[Group::identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId s : seed) {
      const ElementId y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Candidate {
  std::vector<ElementId> members;
  std::vector<ElementId> generators;
};

bool contains_all(const std::vector<ElementId>& big, const std::vector<ElementId>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<std::vector<ElementId>> all_subgroups(const Group& g) {
  // Every subgroup is a join of cyclic subgroups.
  std::vector<Candidate> cyclic;
  std::set<std::vector<ElementId>> seen_cyclic;
  for (ElementId x = 0; x < g.order(); ++x) {
    auto members = closure(g, {x});
    if (seen_cyclic.insert(members).second) cyclic.push_back({members, {x}});
  }
  std::set<std::vector<ElementId>> seen;
  std::deque<Candidate> work(cyclic.begin(), cyclic.end());
  for (const auto& c : cyclic) seen.insert(c.members);
  std::vector<std::vector<ElementId>> out(seen.begin(), seen.end());
  while (!work.empty()) {
    Candidate h = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclic) {
      if (contains_all(h.members, c.members)) continue;
      Candidate k{{}, h.generators};
      k.generators.push_back(c.generators[0]);
      k.members = closure(g, k.generators);
      if (seen.insert(k.members).second) {
        out.push_back(k.members);
        work.push_back(std::move(k));
      }
    }
  }
  return out;
}

std::vector<std::vector<ElementId>> normal_subgroups(const Group& g) {
  std::vector<std::vector<ElementId>> out;
  for (auto& h : all_subgroups(g)) {
    std::vector<bool> in(g.order(), false);
    for (ElementId x : h) in[x] = true;
    bool normal = true;
    for (ElementId a = 0; a < g.order() && normal; ++a) {
      for (ElementId x : h) {
        if (!in[g.mul(g.mul(a, x), g.inv(a))]) {
          normal = false;
          break;
        }
      }
    }
    if (normal) out.push_back(std::move(h));
  }
  return out;
}

std::vector<ElementId> derived_subgroup(const Group& g) {
  std::set<ElementId> commutators;
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId y = 0; y < g.order(); ++y) {
      commutators.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    }
  }
  return closure(g, std::vector<ElementId>(commutators.begin(), commutators.end()));
}

std::size_t generated_order(const std::vector<propr::GroupElement>& generators) {
  const propr::GroupElement id = propr::identity_like(generators.at(0));
  std::set<std::vector<std::uint8_t>> seen{propr::element_encode(id)};
  std::deque<propr::GroupElement> work{id};
  while (!work.empty()) {
    const propr::GroupElement x = work.front();
    work.pop_front();
    for (const auto& s : generators) {
      propr::GroupElement y = x * s;
      if (seen.insert(propr::element_encode(y)).second) work.push_back(std::move(y));
    }
  }
  return seen.size();
}

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo monic b over Z/p.
Poly remainder(Poly a, const Poly& b, std::uint32_t p) {
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

bool irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // all monic polynomials of degree d
    Poly f(d + 1, 0);
    f[d] = 1;
    while (true) {
      if (remainder(poly, f, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++f[i] == p) f[i++] = 0;
      if (i == d) break;
    }
  }
  return deg >= 1;
}

std::uint64_t gl_order(std::uint32_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

std::uint64_t sl_order(std::uint32_t n, std::uint64_t q) { return gl_order(n, q) / (q - 1); }

std::uint64_t psl_order(std::uint32_t n, std::uint64_t q) { return sl_order(n, q) / std::gcd<std::uint64_t>(n, q - 1); }

std::optional<std::vector<int>> star_sizes(const std::vector<std::size_t>& out_edge) {
  const std::size_t k = out_edge.size();
  std::vector<int> leaves(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = out_edge[i];
    if (c == i) continue;
    if (out_edge[c] != c) return std::nullopt;  // edge into a vertex that is not a center
    ++leaves[c];
  }
  std::vector<int> sizes;
  for (std::size_t i = 0; i < k; ++i) {
    if (out_edge[i] == i) sizes.push_back(leaves[i]);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::map<std::uint64_t, std::size_t> order_statistics(const Group& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    std::uint64_t k = 1;
    for (ElementId y = x; y != Group::identity(); y = g.mul(y, x)) ++k;
    ++out[k];
  }
  return out;
}

std::map<std::uint64_t, std::size_t> cyclic_product_statistics(const std::vector<std::uint64_t>& moduli) {
  std::map<std::uint64_t, std::size_t> out;
  std::vector<std::uint64_t> t(moduli.size(), 0);
  while (true) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      order = std::lcm(order, moduli[i] / std::gcd(moduli[i], t[i]));
    }
    ++out[order];
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == moduli[i]) t[i++] = 0;
    if (i == t.size()) break;
  }
  return out;
}

}  // namespace oracle
