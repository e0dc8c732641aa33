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

#ifndef LNPT_LNPT_HPP
#define LNPT_LNPT_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "lnpt/permtypes.hpp"

namespace lnpt {

/// A de Bruijn binding depth.
struct Level {
  std::uint32_t depth = 0;

  constexpr Level next() const { return Level{depth + 1}; }
  friend constexpr auto operator<=>(const Level &, const Level &) = default;
};

// A locally nameless permutation type adds four equivariant operations to a
// permutation type:
//   open_at(i, x, t)   replace dangling index i by the atom x
//   close_at(i, x, t)  replace the atom x by index i
//   lc_at(i, t)        every dangling index is below i
//   lc(t)              locally closed
// The laws relating them are checked by the axiom suite (suites.hpp).

template <class T>
concept LnValue = PermValue<T> && requires(Level i, Atom x, const T &t) {
  { open_at(i, x, t) } -> std::same_as<T>;
  { close_at(i, x, t) } -> std::same_as<T>;
  { lc_at(i, t) } -> std::same_as<bool>;
  { lc(t) } -> std::same_as<bool>;
};

/// t^x
template <class T>
T open0(Atom x, const T &t) {
  return open_at(Level{0}, x, t);
}

/// A channel position: a free atom or a bound index.
class Name {
 public:
  static Name free(Atom a) { return Name(a.index, false); }
  static Name bound(Level i) { return Name(i.depth, true); }

  bool is_free() const { return !bound_; }
  bool is_bound() const { return bound_; }
  Atom atom() const { return Atom{value_}; }
  Level level() const { return Level{value_}; }

  friend bool operator==(const Name &, const Name &) = default;
  friend auto operator<=>(const Name &, const Name &) = default;

 private:
  Name(std::uint32_t v, bool b) : value_(v), bound_(b) {}
  std::uint32_t value_;
  bool bound_;
};

inline Name apply(const Permutation &p, const Name &n) {
  return n.is_free() ? Name::free(p(n.atom())) : n;
}
inline NameSet supp(const Name &n) { return n.is_free() ? NameSet::finite({n.atom()}) : NameSet(); }

inline Name open_at(Level i, Atom x, const Name &n) {
  return n.is_bound() && n.level() == i ? Name::free(x) : n;
}
inline Name close_at(Level i, Atom x, const Name &n) {
  return n.is_free() && n.atom() == x ? Name::bound(i) : n;
}
inline bool lc_at(Level i, const Name &n) { return n.is_free() || n.level() < i; }
inline bool lc(const Name &n) { return n.is_free(); }

// Derived instances: pairs, alternatives, lists and N -> T act pointwise and
// never shift the level.

template <class A, class B>
std::pair<A, B> open_at(Level i, Atom x, const std::pair<A, B> &t);
template <class A, class B>
std::pair<A, B> close_at(Level i, Atom x, const std::pair<A, B> &t);
template <class A, class B>
bool lc_at(Level i, const std::pair<A, B> &t);
template <class A, class B>
bool lc(const std::pair<A, B> &t);

template <class T>
std::vector<T> open_at(Level i, Atom x, const std::vector<T> &t);
template <class T>
std::vector<T> close_at(Level i, Atom x, const std::vector<T> &t);
template <class T>
bool lc_at(Level i, const std::vector<T> &t);
template <class T>
bool lc(const std::vector<T> &t);

template <class... Ts>
std::variant<Ts...> open_at(Level i, Atom x, const std::variant<Ts...> &t);
template <class... Ts>
std::variant<Ts...> close_at(Level i, Atom x, const std::variant<Ts...> &t);
template <class... Ts>
bool lc_at(Level i, const std::variant<Ts...> &t);
template <class... Ts>
bool lc(const std::variant<Ts...> &t);

template <class T>
IndexedFamily<T> open_at(Level i, Atom x, const IndexedFamily<T> &t);
template <class T>
IndexedFamily<T> close_at(Level i, Atom x, const IndexedFamily<T> &t);
template <class T>
bool lc_at(Level i, const IndexedFamily<T> &t);
template <class T>
bool lc(const IndexedFamily<T> &t);

template <class A, class B>
std::pair<A, B> open_at(Level i, Atom x, const std::pair<A, B> &t) {
  return {open_at(i, x, t.first), open_at(i, x, t.second)};
}
template <class A, class B>
std::pair<A, B> close_at(Level i, Atom x, const std::pair<A, B> &t) {
  return {close_at(i, x, t.first), close_at(i, x, t.second)};
}
template <class A, class B>
bool lc_at(Level i, const std::pair<A, B> &t) {
  return lc_at(i, t.first) && lc_at(i, t.second);
}
template <class A, class B>
bool lc(const std::pair<A, B> &t) {
  return lc(t.first) && lc(t.second);
}

template <class T>
std::vector<T> open_at(Level i, Atom x, const std::vector<T> &t) {
  std::vector<T> out;
  out.reserve(t.size());
  for (const auto &e : t) out.push_back(open_at(i, x, e));
  return out;
}
template <class T>
std::vector<T> close_at(Level i, Atom x, const std::vector<T> &t) {
  std::vector<T> out;
  out.reserve(t.size());
  for (const auto &e : t) out.push_back(close_at(i, x, e));
  return out;
}
template <class T>
bool lc_at(Level i, const std::vector<T> &t) {
  for (const auto &e : t)
    if (!lc_at(i, e)) return false;
  return true;
}
template <class T>
bool lc(const std::vector<T> &t) {
  for (const auto &e : t)
    if (!lc(e)) return false;
  return true;
}

template <class... Ts>
std::variant<Ts...> open_at(Level i, Atom x, const std::variant<Ts...> &t) {
  return std::visit([&](const auto &v) { return std::variant<Ts...>(open_at(i, x, v)); }, t);
}
template <class... Ts>
std::variant<Ts...> close_at(Level i, Atom x, const std::variant<Ts...> &t) {
  return std::visit([&](const auto &v) { return std::variant<Ts...>(close_at(i, x, v)); }, t);
}
template <class... Ts>
bool lc_at(Level i, const std::variant<Ts...> &t) {
  return std::visit([&](const auto &v) { return lc_at(i, v); }, t);
}
template <class... Ts>
bool lc(const std::variant<Ts...> &t) {
  return std::visit([](const auto &v) { return lc(v); }, t);
}

template <class T>
IndexedFamily<T> open_at(Level i, Atom x, const IndexedFamily<T> &t) {
  return t.map([&](const T &e) { return open_at(i, x, e); });
}
template <class T>
IndexedFamily<T> close_at(Level i, Atom x, const IndexedFamily<T> &t) {
  return t.map([&](const T &e) { return close_at(i, x, e); });
}
template <class T>
bool lc_at(Level i, const IndexedFamily<T> &t) {
  return lc_at(i, t.entries()) && lc_at(i, t.fallback());
}
template <class T>
bool lc(const IndexedFamily<T> &t) {
  return lc(t.entries()) && lc(t.fallback());
}

}  // namespace lnpt

#endif
