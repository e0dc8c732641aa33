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

#ifndef LNPT_NAMESETS_HPP
#define LNPT_NAMESETS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lnpt/atoms.hpp"

namespace lnpt {

/// A set of atoms given by a periodic base (membership decided by
/// index mod modulus) overridden on finitely many exception atoms.
///
/// This class is closed under the boolean operations, permutation and
/// support, and covers finite sets, cofinite sets and residue classes such as
/// the even and odd atoms. Values are kept canonical:
///  - the modulus is the least period of the base,
///  - an all-in or all-out base has modulus 1,
///  - every exception disagrees with the base.
/// Structural equality is therefore extensional equality.
class NameSet {
 public:
  /// The empty set.
  NameSet();

  static NameSet none() { return NameSet(); }
  static NameSet all();
  static NameSet finite(const std::vector<Atom> &atoms);
  static NameSet cofinite(const std::vector<Atom> &excluded);
  /// {a | index(a) mod modulus is in residues}. modulus must be >= 1.
  static NameSet periodic(std::uint32_t modulus, const std::vector<std::uint32_t> &residues);
  static NameSet evens() { return periodic(2, {0}); }
  static NameSet odds() { return periodic(2, {1}); }
  /// Canonicalizes an arbitrary (modulus, residues, exceptions) triple.
  static NameSet from_parts(std::uint32_t modulus, const std::vector<std::uint32_t> &residues,
                            const std::map<Atom, bool> &exceptions);

  bool contains(Atom a) const;
  bool base_contains(std::uint32_t index) const { return base_[index % modulus()]; }

  std::uint32_t modulus() const { return static_cast<std::uint32_t>(base_.size()); }
  std::vector<std::uint32_t> residues() const;
  const std::map<Atom, bool> &exceptions() const { return exceptions_; }

  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  bool is_infinite() const { return !is_finite(); }
  /// Neither finite nor cofinite.
  bool is_properly_periodic() const { return modulus() > 1; }

  std::optional<Atom> least() const;
  /// The k least members, fewer when the set is smaller.
  std::vector<Atom> enumerate(std::size_t k) const;
  /// All members of a finite set; throws Error(BadInput) otherwise.
  std::vector<Atom> elements() const;

  /// One past the largest exception index (0 without exceptions).
  std::uint32_t exception_bound() const;

  friend bool operator==(const NameSet &, const NameSet &) = default;
  friend auto operator<=>(const NameSet &, const NameSet &) = default;

 private:
  void canonicalize();

  std::vector<bool> base_;  // size == modulus
  std::map<Atom, bool> exceptions_;
};

inline bool member(const NameSet &s, Atom a) { return s.contains(a); }

NameSet unite(const NameSet &a, const NameSet &b);
NameSet intersect(const NameSet &a, const NameSet &b);
NameSet difference(const NameSet &a, const NameSet &b);
NameSet complement(const NameSet &s);
bool is_subset(const NameSet &a, const NameSet &b);

NameSet with(const NameSet &s, Atom a);

/// Least atom in s but not in avoid; throws Error(Exhausted) when s \ avoid is empty.
Atom pick_outside(const NameSet &s, const NameSet &avoid);

/// Least atom not in avoid; throws Error(AllNamesAvoided) when avoid is every atom.
Atom fresh(const NameSet &avoid);

/// Pointwise image {p(a) | a in s}.
NameSet apply(const Permutation &p, const NameSet &s);

/// Support of a set of atoms: the set itself when finite, the complement when
/// cofinite, and every atom otherwise.
NameSet supp(const NameSet &s);
inline NameSet supp_of_set(const NameSet &s) { return supp(s); }

}  // namespace lnpt

#endif
