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

#ifndef LNPT_TERM_HPP
#define LNPT_TERM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "lnpt/lnpt.hpp"

namespace lnpt {

enum class TermKind : std::uint8_t { Nil, Sum, Inp, Out, Par, Res, Rep };

struct TermNode;

/// Locally nameless pi-calculus process:
///   nil | sum[P...; P] | n?P | n!m.P | P | Q | new P | *P
/// Input and restriction bind one level in their body. Terms are immutable
/// shared trees; alpha-equivalent processes are structurally equal.
class Term {
 public:
  /// nil
  Term();

  static Term nil() { return Term(); }
  static Term sum(IndexedFamily<Term> family);
  static Term inp(Name chan, Term body);
  static Term out(Name chan, Name msg, Term cont);
  static Term par(Term left, Term right);
  static Term res(Term body);
  static Term rep(Term body);

  TermKind kind() const;
  /// Channel of an input or output.
  const Name &chan() const;
  /// Message of an output.
  const Name &msg() const;
  /// Body of an input, restriction or replication; continuation of an output.
  const Term &body() const;
  const Term &left() const;
  const Term &right() const;
  const IndexedFamily<Term> &family() const;

  /// Free atoms, sorted.
  const std::vector<Atom> &free_atoms() const;
  /// Least level i with lc_at(i, *this).
  std::uint32_t closure_level() const;
  std::size_t size() const;

  friend bool operator==(const Term &a, const Term &b);
  friend std::strong_ordering operator<=>(const Term &a, const Term &b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

Term apply(const Permutation &p, const Term &t);
NameSet supp(const Term &t);
inline NameSet free_names(const Term &t) { return supp(t); }

Term open_at(Level i, Atom x, const Term &t);
Term close_at(Level i, Atom x, const Term &t);
bool lc_at(Level i, const Term &t);

/// Local closure decided by the cofinite rules: every binder body P must
/// satisfy lc(P^x) for all x outside a finite set. The premise is checked at
/// the least atom fresh for P and at `extra_witnesses` further fresh atoms
/// (whose own sub-derivations are decided at a single witness).
bool lc_cofinite(const Term &t, unsigned extra_witnesses);
inline bool lc(const Term &t) { return lc_cofinite(t, 3); }

inline Term term_open_at(Level i, Atom x, const Term &t) { return open_at(i, x, t); }
inline Term term_close_at(Level i, Atom x, const Term &t) { return close_at(i, x, t); }
inline bool term_lc_at(Level i, const Term &t) { return lc_at(i, t); }
inline bool term_lc(const Term &t) { return lc(t); }

}  // namespace lnpt

#endif
