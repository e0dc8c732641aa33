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

#ifndef LNPT_TESTS_ORACLE_HPP
#define LNPT_TESTS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lnpt/lts.hpp"

namespace oracle {

using namespace lnpt;

/// Atoms 0..limit-1.
NameSet window(std::uint32_t limit);

/// Free atoms of a term by a direct walk that ignores the cached sets.
std::vector<Atom> walk_free_atoms(const Term &t);

template <class T>
T act(const Permutation &p, const T &t) {
  return apply(p, t);
}

/// Support read straight off its definition: a is in supp(t) when
/// (a b).t != t for infinitely many b. Sampling b over 0..limit-1, the set of
/// such b is infinite exactly when it reaches past `hi`, provided `hi`
/// exceeds every index mentioned by t and limit - hi spans several periods.
/// Returns the candidates a < limit that qualify.
template <class T>
NameSet sampled_supp(const T &t, std::uint32_t hi, std::uint32_t limit = 64) {
  std::vector<Atom> out;
  for (std::uint32_t a = 0; a < limit; ++a)
    for (std::uint32_t b = hi; b < limit; ++b) {
      if (b == a) continue;
      if (!(act(transposition(Atom{a}, Atom{b}), t) == t)) {
        out.push_back(Atom{a});
        break;
      }
    }
  return NameSet::finite(out);
}

/// supp(t) restricted to the sampled window agrees with sampled_supp.
template <class T>
bool supp_matches_definition(const T &t, std::uint32_t hi, std::uint32_t limit = 64) {
  return intersect(supp(t), window(limit)) == sampled_supp(t, hi, limit);
}

}  // namespace oracle

#endif
