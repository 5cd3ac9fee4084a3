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

#include "propr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "propr/errors.hpp"
#include "propr/homomorphism.hpp"

namespace propr {

namespace {

constexpr std::uint64_t order_limit = std::uint64_t{1} << 62;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > order_limit / a) return order_limit;
  return a * b;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

std::uint64_t gl_order(std::uint32_t n, std::uint32_t q) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn = saturating_mul(qn, q);
  std::uint64_t r = 1;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r = saturating_mul(r, qn - qi);
    qi *= q;
  }
  return r;
}

void validate(const Atom& a, std::size_t position) {
  auto fail = [&](const std::string& why) { throw ParseError(why, position); };
  switch (a.family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::symmetric:
    case Family::alternating:
      if (a.n < 1) fail("group parameter must be at least 1");
      if (a.n > 65536) fail("group parameter too large");
      break;
    case Family::quaternion:
      if (a.n != 8) fail("only the quaternion group Q8 is supported");
      break;
    case Family::general_linear:
    case Family::special_linear:
    case Family::projective_special_linear: {
      if (a.family == Family::projective_special_linear && a.n < 2) fail("PSL needs dimension at least 2");
      if (a.n < 1 || a.n > MatrixDomain::max_dimension) fail("matrix dimension must be between 1 and 4");
      if (prime_power(a.q).first == 0) fail(std::to_string(a.q) + " is not a prime power");
      if (a.q > FiniteField::max_order) fail("field order exceeds 65536");
      break;
    }
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    spec.atoms.push_back(atom());
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_];
      if (c != 'x' && c != 'X') throw ParseError("expected 'x' between factors", pos_);
      ++pos_;
      spec.atoms.push_back(atom());
    }
    return spec;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::uint32_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffull) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return static_cast<std::uint32_t>(v);
  }

  Atom atom() {
    skip_space();
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      name += static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    if (name.empty()) throw ParseError("expected a group name", start);

    Atom a{Family::cyclic};
    if (name == "C") a.family = Family::cyclic;
    else if (name == "D") a.family = Family::dihedral;
    else if (name == "S") a.family = Family::symmetric;
    else if (name == "A") a.family = Family::alternating;
    else if (name == "Q") a.family = Family::quaternion;
    else if (name == "GL") a.family = Family::general_linear;
    else if (name == "SL") a.family = Family::special_linear;
    else if (name == "PSL") a.family = Family::projective_special_linear;
    else throw ParseError("unknown group family '" + name + "'", start);

    std::vector<std::uint32_t> params;
    if (peek('(')) {
      ++pos_;
      params.push_back(integer());
      while (peek(',')) {
        ++pos_;
        params.push_back(integer());
      }
      expect(')');
    } else {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        params.push_back(integer());
      }
    }

    const bool matrix = a.family == Family::general_linear || a.family == Family::special_linear ||
                        a.family == Family::projective_special_linear;
    if (matrix) {
      if (params.size() != 2) throw ParseError(name + " takes two parameters (n, q)", start);
      a.n = params[0];
      a.q = params[1];
    } else if (a.family == Family::quaternion) {
      if (params.size() > 1) throw ParseError("Q8 takes no further parameters", start);
      a.n = params.empty() ? 0 : params[0];
    } else {
      if (params.size() != 1) throw ParseError(name + " takes one parameter", start);
      a.n = params[0];
    }
    validate(a, start);
    return a;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<GroupElement> perms(std::uint32_t degree,
                                const std::vector<std::vector<std::vector<std::uint32_t>>>& cycle_sets) {
  std::vector<GroupElement> out;
  for (const auto& cycles : cycle_sets) out.push_back(make_element(Permutation::from_cycles(degree, cycles)));
  return out;
}

std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> r;
  for (std::uint32_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

std::vector<GroupElement> permutation_generators(const Atom& a) {
  const std::uint32_t n = a.n;
  switch (a.family) {
    case Family::cyclic:
      return perms(n, {{range(0, n)}});
    case Family::dihedral: {
      if (n == 1) return perms(2, {{{0, 1}}});
      if (n == 2) return perms(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
      std::vector<std::uint32_t> reflection(n);
      for (std::uint32_t i = 0; i < n; ++i) reflection[i] = (n - i) % n;
      return {make_element(Permutation::from_cycles(n, {range(0, n)})), make_element(Permutation(reflection))};
    }
    case Family::symmetric:
      if (n < 3) return perms(n, {{range(0, n)}});
      return perms(n, {{{0, 1}}, {range(0, n)}});
    case Family::alternating:
      if (n < 3) return perms(n, {{}});
      if (n == 3) return perms(3, {{{0, 1, 2}}});
      return perms(n, {{{0, 1, 2}}, {n % 2 == 1 ? range(0, n) : range(1, n)}});
    case Family::quaternion:
      // Left multiplication by i and j on 1, i, j, k, -1, -i, -j, -k.
      return {make_element(Permutation({1, 4, 3, 6, 5, 0, 7, 2})),
              make_element(Permutation({2, 7, 4, 1, 6, 3, 0, 5}))};
    default:
      throw InvariantViolation("not a permutation family");
  }
}

std::vector<GroupElement> matrix_generators(std::uint32_t n, std::uint32_t q, bool include_diagonal) {
  const auto [p, k] = prime_power(q);
  const FieldPtr field = FiniteField::make(p, k);
  const FieldElement omega = field->primitive_element();
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t t = 0; t < k; ++t) {
        gens.push_back(make_element(Matrix::transvection(field, n, i, j, field->pow(omega, t))));
      }
    }
  }
  if (include_diagonal) {
    std::vector<FieldElement> diag(n, field->one());
    diag[0] = omega;
    gens.push_back(make_element(Matrix::diagonal(field, diag)));
  }
  if (gens.empty()) gens.push_back(make_element(Matrix::identity(field, n)));
  return gens;
}

GroupPtr realize_psl(const Atom& a, std::size_t cap) {
  const GroupPtr sl = Group::enumerate(matrix_generators(a.n, a.q, false), cap);
  const auto [p, k] = prime_power(a.q);
  const FieldPtr field = FiniteField::make(p, k);
  std::vector<ElementId> scalars;
  for (std::uint32_t v = 1; v < a.q; ++v) {
    const FieldElement lambda{v};
    if (field->pow(lambda, a.n) != field->one()) continue;
    std::vector<FieldElement> diag(a.n, lambda);
    scalars.push_back(sl->index_of(make_element(Matrix::diagonal(field, diag))));
  }
  const Subgroup centre = subgroup_generated(sl, scalars);
  const GroupPtr q = quotient_group(sl, centre).group;
  // quotients skip the multiplication table; enumerate again to get one
  std::vector<std::vector<std::uint8_t>> keys;
  for (ElementId gen : q->generators()) {
    auto k = q->key(gen);
    keys.emplace_back(k.begin(), k.end());
  }
  return Group::enumerate(q->domain_ptr(), keys, cap);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const Atom& a) {
  switch (a.family) {
    case Family::cyclic: return "C" + std::to_string(a.n);
    case Family::dihedral: return "D" + std::to_string(a.n);
    case Family::symmetric: return "S" + std::to_string(a.n);
    case Family::alternating: return "A" + std::to_string(a.n);
    case Family::quaternion: return "Q8";
    case Family::general_linear: return "GL(" + std::to_string(a.n) + "," + std::to_string(a.q) + ")";
    case Family::special_linear: return "SL(" + std::to_string(a.n) + "," + std::to_string(a.q) + ")";
    case Family::projective_special_linear:
      return "PSL(" + std::to_string(a.n) + "," + std::to_string(a.q) + ")";
  }
  return "?";
}

std::string to_string(const GroupSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    if (i) s += "x";
    s += to_string(spec.atoms[i]);
  }
  return s;
}

GroupSpec normal_form(GroupSpec spec) {
  for (auto& a : spec.atoms) {
    if (a.family == Family::quaternion) a.n = 8;
  }
  std::vector<Atom> kept;
  for (const auto& a : spec.atoms) {
    if (predicted_order(a) != 1) kept.push_back(a);
  }
  if (kept.empty()) kept.push_back(Atom{Family::cyclic, 1, 0});
  std::sort(kept.begin(), kept.end());
  return GroupSpec{std::move(kept)};
}

std::uint64_t predicted_order(const Atom& a) {
  switch (a.family) {
    case Family::cyclic: return a.n;
    case Family::dihedral: return 2ull * a.n;
    case Family::symmetric: return factorial(a.n);
    case Family::alternating: return a.n < 2 ? 1 : factorial(a.n) / 2;
    case Family::quaternion: return 8;
    case Family::general_linear: return gl_order(a.n, a.q);
    case Family::special_linear: return gl_order(a.n, a.q) / (a.q - 1);
    case Family::projective_special_linear:
      return gl_order(a.n, a.q) / (a.q - 1) / std::gcd<std::uint64_t>(a.n, a.q - 1);
  }
  return 0;
}

std::uint64_t predicted_order(const GroupSpec& spec) {
  std::uint64_t r = 1;
  for (const auto& a : spec.atoms) r = saturating_mul(r, predicted_order(a));
  return r;
}

GroupPtr realize(const Atom& a, std::size_t cap) {
  validate(a, 0);
  if (predicted_order(a) > cap) {
    throw CapExceeded(to_string(a) + " has " + std::to_string(predicted_order(a)) +
                      " elements, above the element cap of " + std::to_string(cap));
  }
  GroupPtr g;
  switch (a.family) {
    case Family::general_linear: g = Group::enumerate(matrix_generators(a.n, a.q, true), cap); break;
    case Family::special_linear: g = Group::enumerate(matrix_generators(a.n, a.q, false), cap); break;
    case Family::projective_special_linear: g = realize_psl(a, cap); break;
    default: g = Group::enumerate(permutation_generators(a), cap); break;
  }
  if (g->order() != predicted_order(a)) {
    throw InvariantViolation(to_string(a) + " enumerated to " + std::to_string(g->order()) +
                             " elements, expected " + std::to_string(predicted_order(a)));
  }
  return g;
}

GroupPtr realize(const GroupSpec& spec, std::size_t cap) {
  if (spec.atoms.empty()) throw Error("empty group spec");
  if (spec.atoms.size() == 1) return realize(spec.atoms.front(), cap);
  if (predicted_order(spec) > cap) {
    throw CapExceeded(to_string(spec) + " exceeds the element cap of " + std::to_string(cap));
  }
  std::vector<GroupPtr> factors;
  std::vector<DomainPtr> domains;
  for (const auto& a : spec.atoms) {
    factors.push_back(realize(a, cap));
    domains.push_back(factors.back()->domain_ptr());
  }
  GroupPtr g = Group::direct_product(factors, std::make_shared<const TupleDomain>(domains), cap);
  if (g->order() != predicted_order(spec)) throw InvariantViolation("direct product has the wrong order");
  return g;
}

std::vector<GroupSpec> catalog_specs(std::uint64_t max_order, std::size_t max_factors) {
  std::vector<Atom> atoms;
  auto consider = [&](Atom a) {
    if (predicted_order(a) <= max_order) atoms.push_back(a);
  };
  for (std::uint64_t n = 1; n <= max_order; ++n) consider({Family::cyclic, static_cast<std::uint32_t>(n)});
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) consider({Family::dihedral, static_cast<std::uint32_t>(n)});
  for (std::uint32_t n = 3; factorial(n) <= max_order; ++n) consider({Family::symmetric, n});
  for (std::uint32_t n = 4; factorial(n) / 2 <= max_order; ++n) consider({Family::alternating, n});
  consider({Family::quaternion, 8});
  for (Family f : {Family::general_linear, Family::special_linear, Family::projective_special_linear}) {
    for (std::uint32_t n = 2; n <= MatrixDomain::max_dimension; ++n) {
      for (std::uint32_t q = 2; q <= FiniteField::max_order; ++q) {
        if (prime_power(q).first == 0) continue;
        // PSL(n, q) grows with q, so the first overshoot ends the scan.
        if (predicted_order(Atom{f, n, q}) > max_order) break;
        atoms.push_back({f, n, q});
      }
    }
  }

  std::vector<GroupSpec> out;
  for (const auto& a : atoms) out.push_back(GroupSpec{{a}});

  std::vector<Atom> factors;
  std::sort(atoms.begin(), atoms.end());
  std::vector<Atom> nontrivial;
  std::vector<std::uint64_t> orders;
  for (const auto& a : atoms) {
    if (predicted_order(a) > 1) {
      nontrivial.push_back(a);
      orders.push_back(predicted_order(a));
    }
  }
  std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t start, std::uint64_t order) {
    if (factors.size() >= 2) out.push_back(GroupSpec{factors});
    if (factors.size() == max_factors) return;
    for (std::size_t i = start; i < nontrivial.size(); ++i) {
      const std::uint64_t o = order * orders[i];
      if (o > max_order) continue;
      factors.push_back(nontrivial[i]);
      extend(i, o);
      factors.pop_back();
    }
  };
  extend(0, 1);
  return out;
}

void catalog_enumerate(std::uint64_t max_order, std::size_t max_factors,
                       const std::function<void(const GroupSpec&, const GroupPtr&)>& visit) {
  for (const auto& spec : catalog_specs(max_order, max_factors)) visit(spec, realize(spec));
}

}  // namespace propr
