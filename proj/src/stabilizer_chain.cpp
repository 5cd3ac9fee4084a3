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

#include "propr/stabilizer_chain.hpp"

#include "propr/errors.hpp"

namespace propr {

StabilizerChain::StabilizerChain(const std::vector<Permutation>& generators)
    : degree_(generators.empty() ? 1 : generators.front().degree()) {
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw Error("generators have different degrees");
  }
  for (const auto& g : generators) {
    if (!g.is_identity()) add_strong_generator(g);
  }
  // Repeat until every Schreier generator sifts to the identity.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      const Level& level = levels_[i];
      for (std::size_t oi = 0; !changed && oi < level.orbit.size(); ++oi) {
        const std::uint32_t b = level.orbit[oi];
        const Permutation& ub = level.transversal[static_cast<std::size_t>(level.slot[b])];
        for (std::size_t gi : level.generators) {
          const Permutation& s = strong_[gi];
          const std::uint32_t c = s(b);
          const Permutation& uc = level.transversal[static_cast<std::size_t>(level.slot[c])];
          Permutation h = perm_compose(perm_inverse(uc), perm_compose(s, ub));
          auto [residue, stop] = sift(std::move(h), i + 1);
          if (!residue.is_identity()) {
            add_strong_generator(residue);
            changed = true;
            break;
          }
        }
      }
    }
  }
}

bool StabilizerChain::add_strong_generator(const Permutation& p) {
  bool fixes_base = true;
  for (std::uint32_t b : base_) {
    if (p(b) != b) {
      fixes_base = false;
      break;
    }
  }
  if (fixes_base) {
    for (std::uint32_t x = 0; x < degree_; ++x) {
      if (p(x) != x) {
        base_.push_back(x);
        break;
      }
    }
  }
  strong_.push_back(p);
  rebuild_levels();
  return true;
}

void StabilizerChain::rebuild_levels() {
  levels_.clear();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level level;
    level.point = base_[i];
    for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = strong_[gi](base_[j]) == base_[j];
      if (fixes) level.generators.push_back(gi);
    }
    level.slot.assign(degree_, -1);
    level.slot[level.point] = 0;
    level.orbit.push_back(level.point);
    level.transversal.push_back(Permutation::identity(degree_));
    for (std::size_t oi = 0; oi < level.orbit.size(); ++oi) {
      const std::uint32_t b = level.orbit[oi];
      for (std::size_t gi : level.generators) {
        const std::uint32_t c = strong_[gi](b);
        if (level.slot[c] >= 0) continue;
        level.slot[c] = static_cast<std::int64_t>(level.transversal.size());
        level.transversal.push_back(
            perm_compose(strong_[gi], level.transversal[static_cast<std::size_t>(level.slot[b])]));
        level.orbit.push_back(c);
      }
    }
    levels_.push_back(std::move(level));
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const std::uint32_t b = p(level.point);
    if (level.slot[b] < 0) return {std::move(p), i};
    p = perm_compose(perm_inverse(level.transversal[static_cast<std::size_t>(level.slot[b])]), p);
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).first.is_identity();
}

}  // namespace propr
