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

#include "lnpt/atoms.hpp"

#include <set>

#include "lnpt/error.hpp"

namespace lnpt {

const char *to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AllNamesAvoided: return "AllNamesAvoided";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundedSumSyntax: return "UnboundedSumSyntax";
    case ErrorKind::IllFormedConfig: return "IllFormedConfig";
    case ErrorKind::ExtrusionClash: return "ExtrusionClash";
    case ErrorKind::InternalWitnessClash: return "InternalWitnessClash";
    case ErrorKind::NotFreshAtStart: return "NotFreshAtStart";
    case ErrorKind::NoSuchTransition: return "NoSuchTransition";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Permutation::Permutation(std::map<Atom, Atom> m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->first == it->second)
      it = m.erase(it);
    else
      ++it;
  }
  moved_ = std::move(m);
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Atom>> &cycles) {
  std::map<Atom, Atom> m;
  std::set<Atom> seen;
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!seen.insert(cycle[i]).second)
        throw Error(ErrorKind::BadInput,
                    "atom " + std::to_string(cycle[i].index) + " occurs in more than one cycle position");
      m[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(m));
}

Atom Permutation::operator()(Atom a) const {
  auto it = moved_.find(a);
  return it == moved_.end() ? a : it->second;
}

Permutation Permutation::inverse() const {
  std::map<Atom, Atom> inv;
  for (const auto &[from, to] : moved_) inv.emplace(to, from);
  return Permutation(std::move(inv));
}

std::vector<Atom> Permutation::moved() const {
  std::vector<Atom> out;
  out.reserve(moved_.size());
  for (const auto &kv : moved_) out.push_back(kv.first);
  return out;
}

std::vector<std::vector<Atom>> Permutation::cycles() const {
  std::vector<std::vector<Atom>> out;
  std::set<Atom> done;
  for (const auto &kv : moved_) {
    if (done.count(kv.first)) continue;
    std::vector<Atom> cycle;
    Atom a = kv.first;
    do {
      cycle.push_back(a);
      done.insert(a);
      a = (*this)(a);
    } while (a != kv.first);
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation identity() { return Permutation(); }

Permutation transposition(Atom a, Atom b) {
  if (a == b) return Permutation();
  return Permutation(std::map<Atom, Atom>{{a, b}, {b, a}});
}

Permutation compose(const Permutation &outer, const Permutation &inner) {
  std::map<Atom, Atom> m;
  for (const auto &[from, to] : inner.moved_) m[from] = outer(to);
  for (const auto &[from, to] : outer.moved_)
    if (!inner.moved_.count(from)) m[from] = to;
  return Permutation(std::move(m));
}

}  // namespace lnpt
