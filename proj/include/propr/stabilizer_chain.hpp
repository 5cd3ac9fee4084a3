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
#include <vector>

#include "propr/permutation.hpp"

namespace propr {

/**
 * Base and strong generating set for a permutation group (deterministic
 * Schreier-Sims). Gives the order and a membership test without enumerating
 * elements; used to cross-check the dense engine.
 */
class StabilizerChain {
 public:
  explicit StabilizerChain(const std::vector<Permutation>& generators);

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  const std::vector<std::uint32_t>& base() const noexcept { return base_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }

 private:
  struct Level {
    std::uint32_t point;
    std::vector<std::size_t> generators;  // indices into strong_
    std::vector<std::int64_t> slot;       // point -> index into transversal, -1 if outside orbit
    std::vector<Permutation> transversal;  // transversal[slot[b]] maps point to b
    std::vector<std::uint32_t> orbit;
  };

  // Sifts p through levels [from, end); returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  void rebuild_levels();
  bool add_strong_generator(const Permutation& p);

  std::uint32_t degree_;
  std::vector<std::uint32_t> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace propr
