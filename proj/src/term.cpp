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

#include "lnpt/term.hpp"

#include <algorithm>

namespace lnpt {

struct TermNode {
  TermKind kind = TermKind::Nil;
  Name chan = Name::free(Atom{0});
  Name msg = Name::free(Atom{0});
  Term first;
  Term second;
  std::unique_ptr<IndexedFamily<Term>> family;
  std::vector<Atom> free_atoms;
  std::uint32_t closure_level = 0;
  std::size_t size = 1;
};

namespace {

std::uint32_t name_level(const Name &n) { return n.is_bound() ? n.level().depth + 1 : 0; }
std::uint32_t under_binder(std::uint32_t level) { return level == 0 ? 0 : level - 1; }

void add_atoms(std::vector<Atom> &into, const std::vector<Atom> &from) {
  std::vector<Atom> merged;
  merged.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(merged));
  into = std::move(merged);
}

void add_name(std::vector<Atom> &into, const Name &n) {
  if (n.is_free()) add_atoms(into, {n.atom()});
}

}  // namespace

// nil is represented by the null node.
Term::Term() : node_(nullptr) {}

TermKind Term::kind() const { return node_ ? node_->kind : TermKind::Nil; }
const Name &Term::chan() const { return node_->chan; }
const Name &Term::msg() const { return node_->msg; }
const Term &Term::body() const { return node_->first; }
const Term &Term::left() const { return node_->first; }
const Term &Term::right() const { return node_->second; }
const IndexedFamily<Term> &Term::family() const { return *node_->family; }

const std::vector<Atom> &Term::free_atoms() const {
  static const std::vector<Atom> none;
  return node_ ? node_->free_atoms : none;
}
std::uint32_t Term::closure_level() const { return node_ ? node_->closure_level : 0; }
std::size_t Term::size() const { return node_ ? node_->size : 1; }

Term Term::sum(IndexedFamily<Term> family) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Sum;
  std::uint32_t level = family.fallback().closure_level();
  n->free_atoms = family.fallback().free_atoms();
  n->size = 1 + family.fallback().size();
  for (const auto &e : family.entries()) {
    level = std::max(level, e.closure_level());
    add_atoms(n->free_atoms, e.free_atoms());
    n->size += e.size();
  }
  n->closure_level = level;
  n->family = std::make_unique<IndexedFamily<Term>>(std::move(family));
  return Term(std::move(n));
}

Term Term::inp(Name chan, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Inp;
  n->chan = chan;
  n->free_atoms = body.free_atoms();
  add_name(n->free_atoms, chan);
  n->closure_level = std::max(name_level(chan), under_binder(body.closure_level()));
  n->size = 1 + body.size();
  n->first = std::move(body);
  return Term(std::move(n));
}

Term Term::out(Name chan, Name msg, Term cont) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Out;
  n->chan = chan;
  n->msg = msg;
  n->free_atoms = cont.free_atoms();
  add_name(n->free_atoms, chan);
  add_name(n->free_atoms, msg);
  n->closure_level = std::max({name_level(chan), name_level(msg), cont.closure_level()});
  n->size = 1 + cont.size();
  n->first = std::move(cont);
  return Term(std::move(n));
}

Term Term::par(Term left, Term right) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Par;
  n->free_atoms = left.free_atoms();
  add_atoms(n->free_atoms, right.free_atoms());
  n->closure_level = std::max(left.closure_level(), right.closure_level());
  n->size = 1 + left.size() + right.size();
  n->first = std::move(left);
  n->second = std::move(right);
  return Term(std::move(n));
}

Term Term::res(Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Res;
  n->free_atoms = body.free_atoms();
  n->closure_level = under_binder(body.closure_level());
  n->size = 1 + body.size();
  n->first = std::move(body);
  return Term(std::move(n));
}

Term Term::rep(Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Rep;
  n->free_atoms = body.free_atoms();
  n->closure_level = body.closure_level();
  n->size = 1 + body.size();
  n->first = std::move(body);
  return Term(std::move(n));
}

bool operator==(const Term &a, const Term &b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term &a, const Term &b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case TermKind::Nil:
      return std::strong_ordering::equal;
    case TermKind::Sum:
      return a.family() <=> b.family();
    case TermKind::Inp:
      if (auto c = a.chan() <=> b.chan(); c != 0) return c;
      return a.body() <=> b.body();
    case TermKind::Out:
      if (auto c = a.chan() <=> b.chan(); c != 0) return c;
      if (auto c = a.msg() <=> b.msg(); c != 0) return c;
      return a.body() <=> b.body();
    case TermKind::Par:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    case TermKind::Res:
    case TermKind::Rep:
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

namespace {

// Structural map over names, threading the binding depth.
template <class F>
Term map_names(const Term &t, Level depth, const F &f) {
  switch (t.kind()) {
    case TermKind::Nil:
      return t;
    case TermKind::Sum:
      return Term::sum(t.family().map([&](const Term &e) { return map_names(e, depth, f); }));
    case TermKind::Inp:
      return Term::inp(f(depth, t.chan()), map_names(t.body(), depth.next(), f));
    case TermKind::Out:
      return Term::out(f(depth, t.chan()), f(depth, t.msg()), map_names(t.body(), depth, f));
    case TermKind::Par:
      return Term::par(map_names(t.left(), depth, f), map_names(t.right(), depth, f));
    case TermKind::Res:
      return Term::res(map_names(t.body(), depth.next(), f));
    case TermKind::Rep:
      return Term::rep(map_names(t.body(), depth, f));
  }
  return t;
}

}  // namespace

Term apply(const Permutation &p, const Term &t) {
  if (p.is_identity()) return t;
  return map_names(t, Level{0}, [&](Level, const Name &n) { return apply(p, n); });
}

NameSet supp(const Term &t) { return NameSet::finite(t.free_atoms()); }

Term open_at(Level i, Atom x, const Term &t) {
  return map_names(t, i, [&](Level depth, const Name &n) { return open_at(depth, x, n); });
}

Term close_at(Level i, Atom x, const Term &t) {
  return map_names(t, i, [&](Level depth, const Name &n) { return close_at(depth, x, n); });
}

bool lc_at(Level i, const Term &t) { return t.closure_level() <= i.depth; }

namespace {

bool binder_body_lc(const Term &body, unsigned extra);

bool lc_rules(const Term &t, unsigned extra) {
  switch (t.kind()) {
    case TermKind::Nil:
      return true;
    case TermKind::Sum: {
      const auto &fam = t.family();
      for (const auto &e : fam.entries())
        if (!lc_rules(e, extra)) return false;
      return lc_rules(fam.fallback(), extra);
    }
    case TermKind::Inp:
      return lc(t.chan()) && binder_body_lc(t.body(), extra);
    case TermKind::Out:
      return lc(t.chan()) && lc(t.msg()) && lc_rules(t.body(), extra);
    case TermKind::Par:
      return lc_rules(t.left(), extra) && lc_rules(t.right(), extra);
    case TermKind::Res:
      return binder_body_lc(t.body(), extra);
    case TermKind::Rep:
      return lc_rules(t.body(), extra);
  }
  return false;
}

// forall x not in L . lc(body^x), with L = supp(body).
bool binder_body_lc(const Term &body, unsigned extra) {
  NameSet avoid = supp(body);
  Atom x = fresh(avoid);
  if (!lc_rules(open_at(Level{0}, x, body), extra)) return false;
  for (unsigned k = 0; k < extra; ++k) {
    avoid = with(avoid, x);
    x = fresh(avoid);
    if (!lc_rules(open_at(Level{0}, x, body), 0)) return false;
  }
  return true;
}

}  // namespace

bool lc_cofinite(const Term &t, unsigned extra_witnesses) { return lc_rules(t, extra_witnesses); }

}  // namespace lnpt
