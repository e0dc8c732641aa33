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

#include "support/oracle.hpp"

#include <set>

namespace oracle {

NameSet window(std::uint32_t limit) {
  std::vector<Atom> atoms;
  for (std::uint32_t a = 0; a < limit; ++a) atoms.push_back(Atom{a});
  return NameSet::finite(atoms);
}

namespace {

void walk(const Term &t, std::set<Atom> &out) {
  auto name = [&](const Name &n) {
    if (n.is_free()) out.insert(n.atom());
  };
  switch (t.kind()) {
    case TermKind::Nil: return;
    case TermKind::Sum:
      for (const auto &e : t.family().entries()) walk(e, out);
      walk(t.family().fallback(), out);
      return;
    case TermKind::Inp: name(t.chan()); walk(t.body(), out); return;
    case TermKind::Out: name(t.chan()); name(t.msg()); walk(t.body(), out); return;
    case TermKind::Par: walk(t.left(), out); walk(t.right(), out); return;
    case TermKind::Res:
    case TermKind::Rep: walk(t.body(), out); return;
  }
}

}  // namespace

std::vector<Atom> walk_free_atoms(const Term &t) {
  std::set<Atom> out;
  walk(t, out);
  return {out.begin(), out.end()};
}

}  // namespace oracle
