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

#ifndef LNPT_ATOMS_HPP
#define LNPT_ATOMS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace lnpt {

/// A name drawn from the canonical enumeration x0, x1, ... of all atoms.
/// Display names belong to the symbol table, never to the atom itself.
struct Atom {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Atom &, const Atom &) = default;
};

/// A bijection on atoms moving only finitely many of them.
///
/// Only non-fixed points are stored, so two permutations are equal exactly
/// when their canonical maps are equal.
class Permutation {
 public:
  Permutation() = default;

  /// Builds from disjoint cycles; throws Error(BadInput) when cycles overlap.
  static Permutation from_cycles(const std::vector<std::vector<Atom>> &cycles);

  Atom operator()(Atom a) const;
  Permutation inverse() const;
  bool is_identity() const { return moved_.empty(); }
  const std::map<Atom, Atom> &mapping() const { return moved_; }
  std::vector<Atom> moved() const;
  std::vector<std::vector<Atom>> cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  friend Permutation compose(const Permutation &outer, const Permutation &inner);

 private:
  explicit Permutation(std::map<Atom, Atom> m);
  std::map<Atom, Atom> moved_;

  friend Permutation transposition(Atom a, Atom b);
};

Permutation identity();
/// (a b): exchanges a and b. transposition(a, a) is the identity.
Permutation transposition(Atom a, Atom b);
/// Applies `inner` first, then `outer`.
Permutation compose(const Permutation &outer, const Permutation &inner);
inline Permutation inverse(const Permutation &p) { return p.inverse(); }
inline Atom perm_apply(const Permutation &p, Atom a) { return p(a); }

}  // namespace lnpt

#endif
