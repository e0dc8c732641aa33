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

#include "lnpt/namesets.hpp"

#include <numeric>

#include "lnpt/error.hpp"

namespace lnpt {

namespace {

template <class Op>
NameSet combine(const NameSet &a, const NameSet &b, Op op) {
  const std::uint32_t m = std::lcm(a.modulus(), b.modulus());
  std::vector<std::uint32_t> residues;
  for (std::uint32_t r = 0; r < m; ++r)
    if (op(a.base_contains(r), b.base_contains(r))) residues.push_back(r);
  std::map<Atom, bool> exceptions;
  for (const auto &kv : a.exceptions()) exceptions[kv.first] = op(a.contains(kv.first), b.contains(kv.first));
  for (const auto &kv : b.exceptions()) exceptions[kv.first] = op(a.contains(kv.first), b.contains(kv.first));
  return NameSet::from_parts(m, residues, exceptions);
}

}  // namespace

NameSet::NameSet() : base_(1, false) {}

NameSet NameSet::all() { return from_parts(1, {0}, {}); }

NameSet NameSet::finite(const std::vector<Atom> &atoms) {
  std::map<Atom, bool> exc;
  for (Atom a : atoms) exc[a] = true;
  return from_parts(1, {}, exc);
}

NameSet NameSet::cofinite(const std::vector<Atom> &excluded) {
  std::map<Atom, bool> exc;
  for (Atom a : excluded) exc[a] = false;
  return from_parts(1, {0}, exc);
}

NameSet NameSet::periodic(std::uint32_t modulus, const std::vector<std::uint32_t> &residues) {
  return from_parts(modulus, residues, {});
}

NameSet NameSet::from_parts(std::uint32_t modulus, const std::vector<std::uint32_t> &residues,
                            const std::map<Atom, bool> &exceptions) {
  if (modulus == 0) throw Error(ErrorKind::BadInput, "name set modulus must be at least 1");
  NameSet s;
  s.base_.assign(modulus, false);
  for (std::uint32_t r : residues) {
    if (r >= modulus) throw Error(ErrorKind::BadInput, "residue out of range for modulus");
    s.base_[r] = true;
  }
  s.exceptions_ = exceptions;
  s.canonicalize();
  return s;
}

void NameSet::canonicalize() {
  const std::uint32_t m = modulus();
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (std::uint32_t r = d; r < m && periodic; ++r) periodic = base_[r] == base_[r % d];
    if (periodic) {
      base_.resize(d);
      break;
    }
  }
  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    if (it->second == base_contains(it->first.index))
      it = exceptions_.erase(it);
    else
      ++it;
  }
}

bool NameSet::contains(Atom a) const {
  auto it = exceptions_.find(a);
  if (it != exceptions_.end()) return it->second;
  return base_contains(a.index);
}

std::vector<std::uint32_t> NameSet::residues() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < modulus(); ++r)
    if (base_[r]) out.push_back(r);
  return out;
}

bool NameSet::is_finite() const { return modulus() == 1 && !base_[0]; }
bool NameSet::is_cofinite() const { return modulus() == 1 && base_[0]; }
bool NameSet::is_empty() const { return is_finite() && exceptions_.empty(); }

std::uint32_t NameSet::exception_bound() const {
  return exceptions_.empty() ? 0 : exceptions_.rbegin()->first.index + 1;
}

std::optional<Atom> NameSet::least() const {
  auto found = enumerate(1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Atom> NameSet::enumerate(std::size_t k) const {
  std::vector<Atom> out;
  if (is_finite()) {
    for (const auto &kv : exceptions_) {
      if (out.size() >= k) break;
      out.push_back(kv.first);
    }
    return out;
  }
  // An infinite set has a member in every window of `modulus` indices past the exceptions.
  for (std::uint64_t i = 0; out.size() < k && i <= UINT32_MAX; ++i) {
    Atom a{static_cast<std::uint32_t>(i)};
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::vector<Atom> NameSet::elements() const {
  if (!is_finite()) throw Error(ErrorKind::BadInput, "cannot list the elements of an infinite name set");
  return enumerate(exceptions_.size());
}

NameSet unite(const NameSet &a, const NameSet &b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

NameSet intersect(const NameSet &a, const NameSet &b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

NameSet difference(const NameSet &a, const NameSet &b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

NameSet complement(const NameSet &s) {
  std::vector<std::uint32_t> residues;
  for (std::uint32_t r = 0; r < s.modulus(); ++r)
    if (!s.base_contains(r)) residues.push_back(r);
  std::map<Atom, bool> exc;
  for (const auto &kv : s.exceptions()) exc[kv.first] = !kv.second;
  return NameSet::from_parts(s.modulus(), residues, exc);
}

bool is_subset(const NameSet &a, const NameSet &b) { return difference(a, b).is_empty(); }

NameSet with(const NameSet &s, Atom a) { return unite(s, NameSet::finite({a})); }

Atom pick_outside(const NameSet &s, const NameSet &avoid) {
  auto found = difference(s, avoid).least();
  if (!found) throw Error(ErrorKind::Exhausted, "no atom of the set lies outside the avoided atoms");
  return *found;
}

Atom fresh(const NameSet &avoid) {
  auto found = complement(avoid).least();
  if (!found) throw Error(ErrorKind::AllNamesAvoided, "every atom is avoided");
  return *found;
}

NameSet apply(const Permutation &p, const NameSet &s) {
  if (p.is_identity()) return s;
  std::map<Atom, bool> exc;
  for (const auto &kv : s.exceptions())
    if (p(kv.first) == kv.first) exc[kv.first] = kv.second;
  const Permutation inv = p.inverse();
  for (const auto &kv : p.mapping()) exc[kv.first] = s.contains(inv(kv.first));
  return NameSet::from_parts(s.modulus(), s.residues(), exc);
}

NameSet supp(const NameSet &s) {
  if (s.is_finite()) return s;
  if (s.is_cofinite()) return complement(s);
  return NameSet::all();
}

}  // namespace lnpt
