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

#include "lnpt/suites.hpp"

#include <functional>
#include <set>
#include <utility>
#include <variant>

#include "lnpt/error.hpp"
#include "lnpt/gen.hpp"

namespace lnpt {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto &p : properties) n += p.failed;
  return n;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"fig2-laws", "fig3-axioms", "sect3-lemmas", "lts-lemmas"};
  return names;
}

namespace {

using gen::Rng;

struct Verdict {
  enum Kind { Pass, Skip, Fail } kind;
  std::string detail;
};

Verdict pass() { return {Verdict::Pass, {}}; }
Verdict skip() { return {Verdict::Skip, {}}; }
Verdict expect(bool ok, const char *what = "property violated") {
  return ok ? pass() : Verdict{Verdict::Fail, what};
}

class Runner {
 public:
  Runner(std::string suite, std::size_t cases, std::uint64_t seed) : cases_(cases), seed_(seed) {
    report_.suite = std::move(suite);
  }

  void property(const std::string &name, const std::function<Verdict(Rng &)> &body) {
    PropertyResult r;
    r.name = name;
    const std::uint64_t id = report_.properties.size();
    for (std::size_t k = 0; k < cases_; ++k) {
      // A case whose precondition fails is redrawn, so that skips stay rare.
      Verdict v{Verdict::Skip, {}};
      for (std::uint64_t attempt = 0; attempt < kAttempts && v.kind == Verdict::Skip; ++attempt) {
        Rng rng = gen::stream(seed_, id, k * kAttempts + attempt);
        try {
          v = body(rng);
        } catch (const std::exception &e) {
          v = {Verdict::Fail, std::string("exception: ") + e.what()};
        }
      }
      switch (v.kind) {
        case Verdict::Pass: ++r.passed; break;
        case Verdict::Skip: ++r.skipped; break;
        case Verdict::Fail:
          if (r.failed++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + v.detail;
          break;
      }
    }
    report_.properties.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  static constexpr std::uint64_t kAttempts = 64;

  std::size_t cases_;
  std::uint64_t seed_;
  SuiteReport report_;
};

// Taking both arguments as const lvalues keeps std::apply out of overload
// resolution for std composites.
template <class T>
T act(const Permutation &p, const T &t) {
  return apply(p, t);
}

constexpr std::uint32_t kBound = 10;

Permutation any_perm(Rng &rng) { return gen::permutation(rng, 8, kBound + 4); }

// An atom that is fresh for `t` about half the time.
template <class T>
Atom maybe_fresh(Rng &rng, const T &t) {
  if (std::bernoulli_distribution(0.5)(rng)) return fresh(supp(t));
  return gen::atom(rng, kBound);
}

Level level(Rng &rng) { return Level{std::uniform_int_distribution<std::uint32_t>(0, 2)(rng)}; }

// ---------------------------------------------------------------- fig2-laws

template <class T>
void permutation_laws(Runner &r, const std::string &inst, std::function<T(Rng &)> make) {
  r.property(inst + ": id", [make](Rng &rng) {
    const T t = make(rng);
    return expect(act(identity(), t) == t);
  });
  r.property(inst + ": composition", [make](Rng &rng) {
    const T t = make(rng);
    const Permutation p1 = any_perm(rng), p2 = any_perm(rng);
    return expect(act(compose(p1, p2), t) == act(p1, act(p2, t)));
  });
  r.property(inst + ": supp equivariant", [make](Rng &rng) {
    const T t = make(rng);
    const Permutation p = any_perm(rng);
    return expect(supp(act(p, t)) == act(p, supp(t)));
  });
}

gen::TermOptions small_terms() {
  gen::TermOptions o;
  o.depth = 3;
  o.atom_bound = kBound;
  return o;
}

SuiteReport fig2_laws(std::size_t cases, std::uint64_t seed) {
  Runner r("fig2-laws", cases, seed);
  const auto opts = small_terms();
  permutation_laws<Atom>(r, "Atom", [](Rng &rng) { return gen::atom(rng, kBound); });
  permutation_laws<Permutation>(r, "Permutation", [](Rng &rng) { return gen::permutation(rng, 4, kBound); });
  permutation_laws<std::pair<Atom, std::vector<Atom>>>(r, "pair", [](Rng &rng) {
    return std::pair{gen::atom(rng, kBound), gen::finite_set(rng, 4, kBound).elements()};
  });
  permutation_laws<std::vector<Atom>>(r, "list", [](Rng &rng) {
    std::vector<Atom> out;
    const auto n = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int k = 0; k < n; ++k) out.push_back(gen::atom(rng, kBound));
    return out;
  });
  permutation_laws<std::variant<Atom, NameSet>>(r, "alternative", [](Rng &rng) {
    using V = std::variant<Atom, NameSet>;
    return std::bernoulli_distribution(0.5)(rng) ? V(gen::atom(rng, kBound)) : V(gen::nameset(rng, kBound));
  });
  permutation_laws<NameSet>(r, "NameSet", [](Rng &rng) { return gen::nameset(rng, kBound); });
  permutation_laws<IndexedFamily<Term>>(r, "IndexedFamily", [opts](Rng &rng) { return gen::family(rng, opts); });
  permutation_laws<FiniteTermSet<Term>>(r, "FiniteTermSet", [opts](Rng &rng) {
    std::set<Term> s;
    const auto n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < n; ++k) s.insert(gen::lc_term(rng, opts));
    return FiniteTermSet<Term>(std::move(s));
  });
  permutation_laws<Term>(r, "Term", [opts](Rng &rng) { return gen::any_term(rng, opts); });
  permutation_laws<Action>(r, "Action", [](Rng &rng) { return gen::action(rng, kBound); });
  permutation_laws<Config>(r, "Config", [opts](Rng &rng) { return gen::config(rng, opts); });

  r.property("Permutation: group laws", [](Rng &rng) {
    const Permutation p = any_perm(rng), q = any_perm(rng), s = any_perm(rng);
    return expect(compose(p, compose(q, s)) == compose(compose(p, q), s) &&
                  compose(p, inverse(p)).is_identity() && compose(identity(), p) == p);
  });
  return r.take();
}

// -------------------------------------------------------------- fig3-axioms

template <class T>
void ln_axioms(Runner &r, const std::string &inst, std::function<T(Rng &)> make) {
  r.property(inst + ": lcat_open", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng);
    return expect(lc_at(i, open_at(i, gen::atom(rng, kBound), t)) == lc_at(i.next(), t));
  });
  r.property(inst + ": lc_iff_lc_at", [make](Rng &rng) {
    const T t = make(rng);
    return expect(lc(t) == lc_at(Level{0}, t));
  });
  r.property(inst + ": open_id", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng), i2{i.depth + std::uniform_int_distribution<std::uint32_t>(0, 2)(rng)};
    if (!lc_at(i, t)) return skip();
    return expect(open_at(i2, gen::atom(rng, kBound), t) == t);
  });
  r.property(inst + ": open_supp", [make](Rng &rng) {
    const T t = make(rng);
    const Atom x = maybe_fresh(rng, t), y = gen::atom(rng, kBound);
    if (!is_fresh(x, t) || x == y) return skip();
    return expect(is_fresh(x, open_at(level(rng), y, t)));
  });
  r.property(inst + ": close_id", [make](Rng &rng) {
    const T t = make(rng);
    const Atom x = maybe_fresh(rng, t);
    if (!is_fresh(x, t)) return skip();
    return expect(close_at(level(rng), x, t) == t);
  });
  r.property(inst + ": close_supp", [make](Rng &rng) {
    const T t = make(rng);
    const Atom x = gen::atom(rng, kBound);
    if (!supp(t).is_finite()) return skip();
    return expect(is_fresh(x, close_at(level(rng), x, t)));
  });
  r.property(inst + ": close_open", [make](Rng &rng) {
    const T t = make(rng);
    const Atom x = maybe_fresh(rng, t);
    if (!is_fresh(x, t)) return skip();
    const Level i = level(rng);
    return expect(close_at(i, x, open_at(i, x, t)) == t);
  });
  r.property(inst + ": open_close", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng), i2{i.depth + std::uniform_int_distribution<std::uint32_t>(0, 2)(rng)};
    if (!lc_at(i, t)) return skip();
    const Atom x = gen::atom(rng, kBound);
    return expect(open_at(i2, x, close_at(i2, x, t)) == t);
  });
  r.property(inst + ": open equivariant", [make](Rng &rng) {
    const T t = make(rng);
    const Permutation p = any_perm(rng);
    const Level i = level(rng);
    const Atom x = gen::atom(rng, kBound);
    return expect(act(p, open_at(i, x, t)) == open_at(i, p(x), act(p, t)));
  });
  r.property(inst + ": close equivariant", [make](Rng &rng) {
    const T t = make(rng);
    const Permutation p = any_perm(rng);
    const Level i = level(rng);
    const Atom x = gen::atom(rng, kBound);
    return expect(act(p, close_at(i, x, t)) == close_at(i, p(x), act(p, t)));
  });
  r.property(inst + ": lc equivariant", [make](Rng &rng) {
    const T t = make(rng);
    return expect(lc(act(any_perm(rng), t)) == lc(t));
  });
  r.property(inst + ": lc_at equivariant", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng);
    return expect(lc_at(i, act(any_perm(rng), t)) == lc_at(i, t));
  });
  // Q ranges over lc and lc_at(1).
  r.property(inst + ": fresh opening preserves lc and lc_at(1)", [make](Rng &rng) {
    const T t = make(rng);
    const NameSet s = supp(t);
    const Atom x = fresh(s), y = gen::atom(rng, kBound);
    if (!is_fresh(y, t)) return skip();
    const T tx = open0(x, t), ty = open0(y, t);
    return expect(lc(tx) == lc(ty) && lc_at(Level{1}, tx) == lc_at(Level{1}, ty));
  });
  r.property(inst + ": open absorbed at another level", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng), j = level(rng);
    if (i == j) return skip();
    const Atom x = gen::atom(rng, kBound), y = gen::atom(rng, kBound);
    const T oj = open_at(j, y, t);
    if (!(open_at(i, x, oj) == oj)) return skip();
    return expect(open_at(i, x, t) == t);
  });
  r.property(inst + ": open commutes with close at another level", [make](Rng &rng) {
    const T t = make(rng);
    const Level i = level(rng), j = level(rng);
    const Atom x = gen::atom(rng, kBound), y = gen::atom(rng, kBound), z = gen::atom(rng, kBound);
    if (i == j || x == z) return skip();
    return expect(open_at(i, x, open_at(j, y, close_at(j, z, t))) ==
                  open_at(j, y, close_at(j, z, open_at(i, x, t))));
  });
}

SuiteReport fig3_axioms(std::size_t cases, std::uint64_t seed) {
  Runner r("fig3-axioms", cases, seed);
  const auto opts = small_terms();
  // Alternate lc and non-lc terms.
  ln_axioms<Term>(r, "Term", [opts](Rng &rng) {
    return std::bernoulli_distribution(0.5)(rng) ? gen::lc_term(rng, opts) : gen::any_term(rng, opts);
  });
  ln_axioms<Name>(r, "Name", [](Rng &rng) { return gen::name(rng, kBound); });
  ln_axioms<IndexedFamily<Term>>(r, "IndexedFamily", [opts](Rng &rng) { return gen::family(rng, opts); });
  ln_axioms<std::pair<Term, Name>>(r, "pair", [opts](Rng &rng) {
    return std::pair{gen::any_term(rng, opts), gen::name(rng, kBound)};
  });
  ln_axioms<std::vector<Term>>(r, "list", [opts](Rng &rng) {
    std::vector<Term> out;
    const auto n = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < n; ++k) out.push_back(gen::any_term(rng, opts));
    return out;
  });
  ln_axioms<std::variant<Term, Name>>(r, "alternative", [opts](Rng &rng) {
    using V = std::variant<Term, Name>;
    return std::bernoulli_distribution(0.5)(rng) ? V(gen::any_term(rng, opts)) : V(gen::name(rng, kBound));
  });
  return r.take();
}

// ------------------------------------------------------------- sect3-lemmas

NameSet children_supp(const Term &t) {
  switch (t.kind()) {
    case TermKind::Nil: return NameSet();
    case TermKind::Sum: return supp(t.family());
    case TermKind::Inp: return unite(supp(t.chan()), supp(t.body()));
    case TermKind::Out: return unite(unite(supp(t.chan()), supp(t.msg())), supp(t.body()));
    case TermKind::Par: return unite(supp(t.left()), supp(t.right()));
    case TermKind::Res:
    case TermKind::Rep: return supp(t.body());
  }
  return NameSet();
}

// Agreement of the canonical form with membership, on a window that covers
// every exception and several periods.
bool same_members(const NameSet &s, const std::function<bool(Atom)> &member_fn) {
  for (std::uint32_t n = 0; n < kBound + 48; ++n)
    if (s.contains(Atom{n}) != member_fn(Atom{n})) return false;
  return true;
}

template <class T>
Verdict swap_moves(Rng &rng, const T &t) {
  const NameSet s = supp(t);
  if (!s.is_finite() || s.is_empty()) return skip();
  const auto elems = s.elements();
  const Atom b = elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
  const Atom a = maybe_fresh(rng, t);
  if (!is_fresh(a, t)) return skip();
  return expect(!(act(transposition(a, b), t) == t));
}

SuiteReport sect3_lemmas(std::size_t cases, std::uint64_t seed) {
  Runner r("sect3-lemmas", cases, seed);
  const auto opts = small_terms();

  r.property("support distributes over Term constructors", [opts](Rng &rng) {
    const Term t = gen::any_term(rng, opts);
    return expect(supp(t) == children_supp(t));
  });
  r.property("NameSet union: supp within the union of supports", [](Rng &rng) {
    const NameSet a = gen::nameset(rng, kBound), b = gen::nameset(rng, kBound);
    return expect(is_subset(supp(unite(a, b)), unite(supp(a), supp(b))));
  });
  r.property("finite NameSet union: supp is the union of supports", [](Rng &rng) {
    const NameSet a = gen::finite_set(rng, 5, kBound), b = gen::finite_set(rng, 5, kBound);
    return expect(supp(unite(a, b)) == unite(supp(a), supp(b)));
  });
  r.property("FiniteTermSet union: supp is the union of supports", [opts](Rng &rng) {
    auto make = [&] {
      std::set<Term> s;
      const auto n = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int k = 0; k < n; ++k) s.insert(gen::lc_term(rng, opts));
      return FiniteTermSet<Term>(std::move(s));
    };
    const auto a = make(), b = make();
    return expect(supp(set_union(a, b)) == unite(supp(a), supp(b)));
  });
  // The left-hand side is read off the family as a function, index by index.
  auto indexed_union = [](const IndexedFamily<Term> &s) {
    NameSet u;
    for (std::size_t n = 0; n < s.fallback_index() + 3; ++n) u = unite(u, supp(s.at(n)));
    return u;
  };
  r.property("IndexedFamily: entry supports within supp", [opts, indexed_union](Rng &rng) {
    const auto s = gen::family(rng, opts);
    return expect(is_subset(indexed_union(s), supp(s)));
  });
  r.property("IndexedFamily: entry supports cover supp", [opts, indexed_union](Rng &rng) {
    const auto s = gen::family(rng, opts);
    return expect(indexed_union(s) == supp(s));
  });
  r.property("NameSet supp finite or all atoms", [](Rng &rng) {
    const NameSet s = supp(gen::nameset(rng, kBound));
    return expect(s.is_finite() || s == NameSet::all());
  });
  r.property("NameSet: a fresh atom implies finite supp", [](Rng &rng) {
    const NameSet s = supp(gen::nameset(rng, kBound));
    const bool has_fresh = !complement(s).is_empty();
    return expect(!has_fresh || s.is_finite());
  });
  r.property("Term and IndexedFamily supp finite", [opts](Rng &rng) {
    return expect(supp(gen::any_term(rng, opts)).is_finite() && supp(gen::family(rng, opts)).is_finite());
  });
  r.property("NameSet: swapping a fresh and a supported atom moves the value", [](Rng &rng) { return swap_moves(rng, gen::nameset(rng, kBound)); });
  r.property("Term: swapping a fresh and a supported atom moves the value", [opts](Rng &rng) { return swap_moves(rng, gen::any_term(rng, opts)); });
  r.property("pick_outside an infinite set avoids a finite set", [](Rng &rng) {
    const NameSet s = gen::nameset(rng, kBound), avoid = gen::finite_set(rng, 6, kBound + 8);
    if (s.is_finite()) return skip();
    const Atom a = pick_outside(s, avoid);
    return expect(s.contains(a) && !avoid.contains(a));
  });
  r.property("equivariant operations keep supp finite", [opts](Rng &rng) {
    const Term t = gen::any_term(rng, opts), u = gen::any_term(rng, opts);
    const Atom x = gen::atom(rng, kBound);
    const NameSet a = gen::finite_set(rng, 5, kBound), b = gen::finite_set(rng, 5, kBound);
    const Level i = level(rng);
    return expect(supp(open_at(i, x, t)).is_finite() && supp(close_at(i, x, t)).is_finite() &&
                  supp(Term::par(t, u)).is_finite() && supp(unite(a, b)).is_finite() &&
                  supp(act(any_perm(rng), t)).is_finite());
  });
  r.property("NameSet operations equivariant", [](Rng &rng) {
    const NameSet a = gen::nameset(rng, kBound), b = gen::nameset(rng, kBound);
    const Permutation p = any_perm(rng);
    return expect(act(p, unite(a, b)) == unite(act(p, a), act(p, b)) &&
                  act(p, intersect(a, b)) == intersect(act(p, a), act(p, b)) &&
                  act(p, complement(a)) == complement(act(p, a)));
  });
  r.property("supp equivariant: NameSet", [](Rng &rng) {
    const NameSet s = gen::nameset(rng, kBound);
    const Permutation p = any_perm(rng);
    return expect(supp(act(p, s)) == act(p, supp(s)));
  });
  r.property("supp equivariant: Term", [opts](Rng &rng) {
    const Term t = gen::any_term(rng, opts);
    const Permutation p = any_perm(rng);
    return expect(supp(act(p, t)) == act(p, supp(t)));
  });
  r.property("NameSet boolean operations extensional", [](Rng &rng) {
    const NameSet a = gen::nameset(rng, kBound), b = gen::nameset(rng, kBound);
    return expect(same_members(unite(a, b), [&](Atom n) { return a.contains(n) || b.contains(n); }) &&
                  same_members(intersect(a, b), [&](Atom n) { return a.contains(n) && b.contains(n); }) &&
                  same_members(difference(a, b), [&](Atom n) { return a.contains(n) && !b.contains(n); }) &&
                  same_members(complement(a), [&](Atom n) { return !a.contains(n); }));
  });
  r.property("NameSet equality extensional", [](Rng &rng) {
    const NameSet a = gen::nameset(rng, kBound), b = gen::nameset(rng, kBound);
    return expect((a == b) == same_members(a, [&](Atom n) { return b.contains(n); }));
  });
  return r.take();
}

// --------------------------------------------------------------- lts-lemmas

constexpr unsigned kFuel = 2;

gen::TermOptions lts_terms() {
  gen::TermOptions o;
  o.depth = 3;
  o.atom_bound = 4;
  return o;
}

template <class F>
Verdict all_derivations(Rng &rng, F &&f) {
  const Config cfg = gen::config(rng, lts_terms());
  for (const auto &d : step(cfg, kFuel).derivations)
    if (auto v = f(cfg, d); v.kind == Verdict::Fail) return v;
  return pass();
}

SuiteReport lts_lemmas(std::size_t cases, std::uint64_t seed) {
  Runner r("lts-lemmas", cases, seed);

  r.property("soundness: derivations check", [](Rng &rng) {
    return all_derivations(rng, [](const Config &, const Derivation &d) {
      auto err = check(d, 3);
      return err ? Verdict{Verdict::Fail, err->message()} : pass();
    });
  });
  r.property("targets locally closed", [](Rng &rng) {
    return all_derivations(rng, [](const Config &, const Derivation &d) { return expect(lc(d.conclusion.dst.proc)); });
  });
  // The observer learns the name it sends or receives; tau leaves it unchanged.
  r.property("environment grows by the communicated name", [](Rng &rng) {
    return all_derivations(rng, [](const Config &cfg, const Derivation &d) {
      const Action &a = d.conclusion.action;
      const NameSet learned = a.kind == ActionKind::Tau ? cfg.env : with(cfg.env, a.name);
      return expect(d.conclusion.src == cfg && d.conclusion.dst.env == learned);
    });
  });
  r.property("bound outputs are fresh", [](Rng &rng) {
    return all_derivations(rng, [](const Config &cfg, const Derivation &d) {
      const Action &a = d.conclusion.action;
      return expect(a.kind != ActionKind::BoundOut || is_fresh(a.name, cfg));
    });
  });
  r.property("fuel monotonicity", [](Rng &rng) {
    const Config cfg = gen::config(rng, lts_terms());
    const StepResult low = step(cfg, kFuel - 1);
    const auto high = step(cfg, kFuel).transitions();
    const std::set<Transition> hs(high.begin(), high.end());
    for (const auto &t : low.transitions())
      if (!hs.count(t)) return expect(false, "transition lost with more fuel");
    return expect(!low.complete || low.transitions() == high, "complete result changed with more fuel");
  });
  r.property("weakening", [](Rng &rng) {
    return all_derivations(rng, [&rng](const Config &, const Derivation &d) {
      const NameSet extra = gen::finite_set(rng, 3, 8);
      const bool clash = !intersect(extr(d.conclusion.action), extra).is_empty();
      try {
        const Derivation w = weaken(d, extra);
        if (clash) return Verdict{Verdict::Fail, "weaken accepted an extrusion clash"};
        if (auto err = check(w, 3)) return Verdict{Verdict::Fail, err->message()};
        return expect(w.conclusion.src.env == unite(d.conclusion.src.env, extra) &&
                      w.conclusion.dst.env == unite(d.conclusion.dst.env, extra));
      } catch (const Error &e) {
        return expect(clash && e.kind() == ErrorKind::ExtrusionClash, e.what());
      }
    });
  });
  r.property("enumerator equivariant", [](Rng &rng) {
    const Config cfg = gen::config(rng, lts_terms());
    const Permutation p = gen::permutation(rng, 4, 8);
    std::set<Transition> expected;
    for (const auto &t : step(cfg, kFuel).transitions()) expected.insert(normalize(act(p, t)));
    const auto got = step(act(p, cfg), kFuel).transitions();
    return expect(std::set<Transition>(got.begin(), got.end()) == expected);
  });
  r.property("renaming start-fresh atoms in traces", [](Rng &rng) {
    const Config start = gen::config(rng, lts_terms());
    std::vector<Action> actions;
    Config cur = start;
    for (int k = 0; k < 3; ++k) {
      const auto ts = step(cur, kFuel).transitions();
      if (ts.empty()) break;
      const auto &t = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
      actions.push_back(t.action);
      cur = t.dst;
    }
    if (actions.empty()) return skip();
    const Trace trace = replay(start, actions, kFuel);
    const Atom n = fresh(supp(start));
    const Atom m = fresh(with(supp(start), n));
    rename_trace(trace, n, m, 3);
    return pass();
  });
  return r.take();
}

}  // namespace

SuiteReport run_suite(const std::string &name, std::size_t cases, std::uint64_t seed) {
  if (name == "fig2-laws") return fig2_laws(cases, seed);
  if (name == "fig3-axioms") return fig3_axioms(cases, seed);
  if (name == "sect3-lemmas") return sect3_lemmas(cases, seed);
  if (name == "lts-lemmas") return lts_lemmas(cases, seed);
  throw Error(ErrorKind::BadInput, "unknown suite '" + name + "'");
}

}  // namespace lnpt
