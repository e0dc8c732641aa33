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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lnpt/error.hpp"
#include "lnpt/gen.hpp"
#include "support/oracle.hpp"

using namespace lnpt;

namespace {
const Atom a0{0}, a1{1}, a2{2}, a3{3}, a4{4}, a5{5}, a7{7};
}

TEST_CASE("member") {
  CHECK(member(NameSet::evens(), a4));
  CHECK_FALSE(member(NameSet::odds(), a0));
  CHECK(member(NameSet::finite({a1, a3}), a3));
  CHECK_FALSE(member(NameSet::finite({a1, a3}), a2));
}

TEST_CASE("boolean operations") {
  const NameSet all = unite(NameSet::odds(), NameSet::evens());
  CHECK(all == NameSet::all());
  CHECK(all.modulus() == 1);
  CHECK(all.residues() == std::vector<std::uint32_t>{0});
  CHECK(all.exceptions().empty());
  CHECK(intersect(NameSet::evens(), NameSet::finite({a1, a2})) == NameSet::finite({a2}));
  const NameSet c = complement(NameSet::finite({a0}));
  CHECK(c == NameSet::cofinite({a0}));
  CHECK(c.is_cofinite());
  CHECK(difference(NameSet::all(), NameSet::finite({a0})) == c);
  CHECK(is_subset(NameSet::finite({a2, a4}), NameSet::evens()));
  CHECK_FALSE(is_subset(NameSet::evens(), NameSet::finite({a2, a4})));
}

TEST_CASE("canonical form") {
  // Period 4 with residues {0, 2} is the even numbers.
  CHECK(NameSet::periodic(4, {0, 2}) == NameSet::evens());
  CHECK(NameSet::periodic(4, {0, 2}).modulus() == 2);
  CHECK(NameSet::periodic(3, {0, 1, 2}) == NameSet::all());
  CHECK(NameSet::periodic(5, {}) == NameSet());
  // An exception agreeing with the base is dropped.
  CHECK(with(NameSet::evens(), a2) == NameSet::evens());
  CHECK(with(NameSet::evens(), a3).exceptions().size() == 1);
}

TEST_CASE("finiteness and enumeration") {
  CHECK(NameSet::evens().is_infinite());
  CHECK_FALSE(NameSet::cofinite({a0}).is_finite());
  CHECK(NameSet::odds().enumerate(3) == std::vector<Atom>{a1, a3, a5});
  CHECK(NameSet::finite({a3, a1}).elements() == std::vector<Atom>{a1, a3});
  CHECK(NameSet::finite({a2}).enumerate(5) == std::vector<Atom>{a2});
  CHECK(NameSet::evens().is_properly_periodic());
  CHECK_FALSE(NameSet::cofinite({a1}).is_properly_periodic());
}

TEST_CASE("pick_outside") {
  CHECK(pick_outside(NameSet::odds(), NameSet::finite({a1, a3})) == a5);
  CHECK(pick_outside(NameSet::all(), NameSet()) == a0);
  try {
    pick_outside(NameSet::finite({a2}), NameSet::finite({a2}));
    FAIL("expected Exhausted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Exhausted);
  }
}

TEST_CASE("permutation action") {
  CHECK(apply(transposition(a0, a2), NameSet::evens()) == NameSet::evens());
  const NameSet moved = apply(transposition(a0, a1), NameSet::evens());
  CHECK(moved == NameSet::from_parts(2, {0}, {{a0, false}, {a1, true}}));
  CHECK_FALSE(moved.contains(a0));
  CHECK(moved.contains(a1));
  CHECK(apply(identity(), NameSet::odds()) == NameSet::odds());
}

TEST_CASE("support") {
  CHECK(supp(NameSet::odds()).contains(a0));
  CHECK(supp(NameSet::odds()) == NameSet::all());
  CHECK(supp(unite(NameSet::odds(), NameSet::evens())).is_empty());
  CHECK(supp(NameSet::finite({a3, a7})) == NameSet::finite({a3, a7}));
  CHECK(supp(NameSet::cofinite({a3, a7})) == NameSet::finite({a3, a7}));
  CHECK(oracle::supp_matches_definition(NameSet::finite({a3, a7}), 12));
  CHECK(oracle::supp_matches_definition(NameSet::odds(), 12));
}

TEST_CASE("support agrees with the definition on random sets") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = gen::stream(11, 0, k);
    const NameSet s = gen::nameset(rng, 10);
    CHECK(oracle::supp_matches_definition(s, 12));
  }
}

TEST_CASE("operations agree with membership") {
  for (std::uint64_t k = 0; k < 300; ++k) {
    auto rng = gen::stream(12, 0, k);
    const NameSet s = gen::nameset(rng, 10), t = gen::nameset(rng, 10);
    const NameSet u = unite(s, t), i = intersect(s, t), d = difference(s, t), c = complement(s);
    for (std::uint32_t n = 0; n < 60; ++n) {
      const Atom a{n};
      CHECK(u.contains(a) == (s.contains(a) || t.contains(a)));
      CHECK(i.contains(a) == (s.contains(a) && t.contains(a)));
      CHECK(d.contains(a) == (s.contains(a) && !t.contains(a)));
      CHECK(c.contains(a) == !s.contains(a));
    }
    if (!s.is_empty()) CHECK(s.contains(*s.least()));
    if (!complement(s).is_empty()) CHECK_FALSE(s.contains(fresh(s)));
  }
}
