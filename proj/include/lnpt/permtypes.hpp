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

#ifndef LNPT_PERMTYPES_HPP
#define LNPT_PERMTYPES_HPP

#include <concepts>
#include <cstddef>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "lnpt/atoms.hpp"
#include "lnpt/namesets.hpp"

namespace lnpt {

// Permutation types: every instance provides
//   apply(p, t)  the permutation action, with id . t = t and (p1 o p2) . t = p1 . (p2 . t)
//   supp(t)      the support {a | infinite {b | (a b) . t != t}}
// Composite instances distribute both pointwise; the support of an
// injective equivariant constructor is the union of its arguments' supports.

template <class T>
concept PermValue = std::equality_comparable<T> && requires(const Permutation &p, const T &t) {
  { apply(p, t) } -> std::same_as<T>;
  { supp(t) } -> std::same_as<NameSet>;
};

/// A map N -> T given by a finite prefix of entries and a value for every
/// later index. Trailing entries equal to the fallback are dropped, so equal
/// families compare equal.
template <class T>
class IndexedFamily {
 public:
  IndexedFamily(std::vector<T> entries, T fallback)
      : entries_(std::move(entries)), fallback_(std::move(fallback)) {
    while (!entries_.empty() && entries_.back() == fallback_) entries_.pop_back();
  }

  const T &at(std::size_t n) const { return n < entries_.size() ? entries_[n] : fallback_; }
  const std::vector<T> &entries() const { return entries_; }
  const T &fallback() const { return fallback_; }
  /// The index standing for all the indices mapped to the fallback.
  std::size_t fallback_index() const { return entries_.size(); }

  template <class F>
  IndexedFamily map(F &&f) const {
    std::vector<T> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(f(e));
    return IndexedFamily(std::move(out), f(fallback_));
  }

  friend bool operator==(const IndexedFamily &, const IndexedFamily &) = default;
  friend auto operator<=>(const IndexedFamily &, const IndexedFamily &) = default;

 private:
  std::vector<T> entries_;
  T fallback_;
};

/// A finite set of values.
template <class T>
class FiniteTermSet {
 public:
  FiniteTermSet() = default;
  explicit FiniteTermSet(std::set<T> elements) : elements_(std::move(elements)) {}

  const std::set<T> &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  friend FiniteTermSet set_union(const FiniteTermSet &a, const FiniteTermSet &b) {
    std::set<T> out = a.elements_;
    out.insert(b.elements_.begin(), b.elements_.end());
    return FiniteTermSet(std::move(out));
  }

  friend bool operator==(const FiniteTermSet &, const FiniteTermSet &) = default;

 private:
  std::set<T> elements_;
};

inline Atom apply(const Permutation &p, Atom a) { return p(a); }
inline NameSet supp(Atom a) { return NameSet::finite({a}); }

/// Permutations act on each other by conjugation.
inline Permutation apply(const Permutation &p, const Permutation &q) {
  return compose(compose(p, q), p.inverse());
}
inline NameSet supp(const Permutation &q) { return NameSet::finite(q.moved()); }

// Degenerate instance used as a component of composites.
inline bool apply(const Permutation &, bool b) { return b; }
inline NameSet supp(bool) { return NameSet(); }

template <class A, class B>
std::pair<A, B> apply(const Permutation &p, const std::pair<A, B> &t);
template <class A, class B>
NameSet supp(const std::pair<A, B> &t);
template <class T>
std::vector<T> apply(const Permutation &p, const std::vector<T> &t);
template <class T>
NameSet supp(const std::vector<T> &t);
template <class... Ts>
std::variant<Ts...> apply(const Permutation &p, const std::variant<Ts...> &t);
template <class... Ts>
NameSet supp(const std::variant<Ts...> &t);
template <class T>
IndexedFamily<T> apply(const Permutation &p, const IndexedFamily<T> &t);
template <class T>
NameSet supp(const IndexedFamily<T> &t);
template <class T>
FiniteTermSet<T> apply(const Permutation &p, const FiniteTermSet<T> &t);
template <class T>
NameSet supp(const FiniteTermSet<T> &t);

template <class A, class B>
std::pair<A, B> apply(const Permutation &p, const std::pair<A, B> &t) {
  return {apply(p, t.first), apply(p, t.second)};
}
template <class A, class B>
NameSet supp(const std::pair<A, B> &t) {
  return unite(supp(t.first), supp(t.second));
}

template <class T>
std::vector<T> apply(const Permutation &p, const std::vector<T> &t) {
  std::vector<T> out;
  out.reserve(t.size());
  for (const auto &e : t) out.push_back(apply(p, e));
  return out;
}
template <class T>
NameSet supp(const std::vector<T> &t) {
  NameSet out;
  for (const auto &e : t) out = unite(out, supp(e));
  return out;
}

template <class... Ts>
std::variant<Ts...> apply(const Permutation &p, const std::variant<Ts...> &t) {
  return std::visit([&](const auto &v) { return std::variant<Ts...>(apply(p, v)); }, t);
}
template <class... Ts>
NameSet supp(const std::variant<Ts...> &t) {
  return std::visit([](const auto &v) { return supp(v); }, t);
}

// The action on the index set N is trivial, so p . f = p o f.
template <class T>
IndexedFamily<T> apply(const Permutation &p, const IndexedFamily<T> &t) {
  return t.map([&](const T &e) { return apply(p, e); });
}
template <class T>
NameSet supp(const IndexedFamily<T> &t) {
  NameSet out = supp(t.fallback());
  for (const auto &e : t.entries()) out = unite(out, supp(e));
  return out;
}

template <class T>
FiniteTermSet<T> apply(const Permutation &p, const FiniteTermSet<T> &t) {
  std::set<T> out;
  for (const auto &e : t.elements()) out.insert(apply(p, e));
  return FiniteTermSet<T>(std::move(out));
}
template <class T>
NameSet supp(const FiniteTermSet<T> &t) {
  NameSet out;
  for (const auto &e : t.elements()) out = unite(out, supp(e));
  return out;
}

/// a # t
template <class T>
bool is_fresh(Atom a, const T &t) {
  return !supp(t).contains(a);
}

}  // namespace lnpt

#endif
