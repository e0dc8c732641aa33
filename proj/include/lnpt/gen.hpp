/*
 * Copyright 2026 The lnpt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LNPT_GEN_HPP
#define LNPT_GEN_HPP

#include <cstdint>
#include <random>
#include <variant>

#include "lnpt/lts.hpp"

namespace lnpt::gen {

using Rng = std::mt19937_64;

/// Independent deterministic stream for one (seed, property, case) triple.
Rng stream(std::uint64_t seed, std::uint64_t property, std::uint64_t case_index);

struct TermOptions {
  unsigned depth = 4;
  /// Free atoms are drawn from indices below this bound.
  std::uint32_t atom_bound = 6;
  bool sums = true;
  bool replication = true;
  /// Probability that a name position holds an arbitrary (possibly dangling) index.
  double dangling = 0.0;
};

Atom atom(Rng &rng, std::uint32_t bound);
Permutation permutation(Rng &rng, unsigned max_swaps, std::uint32_t bound);
NameSet finite_set(Rng &rng, unsigned max_size, std::uint32_t bound);
/// Finite, cofinite or properly periodic, with exceptions.
NameSet nameset(Rng &rng, std::uint32_t bound = 12);

/// Locally closed by construction: binders are generated as fresh atoms and
/// closed afterwards.
Term lc_term(Rng &rng, const TermOptions &opts = {});
/// Like lc_term, but with dangling indices mixed in; roughly half the terms
/// are not locally closed.
Term any_term(Rng &rng, const TermOptions &opts = {});
IndexedFamily<Term> family(Rng &rng, const TermOptions &opts = {});
Name name(Rng &rng, std::uint32_t bound);
Action action(Rng &rng, std::uint32_t bound);
/// An lc process whose environment knows some of its channels.
Config config(Rng &rng, const TermOptions &opts = {});

}  // namespace lnpt::gen

#endif
