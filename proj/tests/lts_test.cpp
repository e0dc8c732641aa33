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

#include <algorithm>

#include "lnpt/error.hpp"
#include "lnpt/serialize.hpp"
#include "lnpt/suites.hpp"
#include "lnpt/syntax.hpp"

using namespace lnpt;

namespace {
const Atom a0{0}, a1{1}, a2{2}, a5{5};
const Name b0 = Name::bound(Level{0});
Name f(Atom a) { return Name::free(a); }
const Term nil = Term::nil();

Config cfg(std::vector<Atom> env, Term p) { return Config{NameSet::finite(env), std::move(p)}; }

// new. a0!#0. 0
Term extruder() { return Term::res(Term::out(f(a0), b0, nil)); }

const Derivation &find(const StepResult &r, Rule rule) {
  auto it = std::find_if(r.derivations.begin(), r.derivations.end(), [&](const Derivation &d) { return d.rule == rule; });
  REQUIRE(it != r.derivations.end());
  return *it;
}

ErrorKind error_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::BadInput;
}
}  // namespace

TEST_CASE("extr") {
  CHECK(extr(Action::tau()).is_empty());
  CHECK(extr(Action::bound_out(a0, a1)) == NameSet::finite({a1}));
  CHECK(extr(Action::out(a0, a1)).is_empty());
}

TEST_CASE("scope extrusion") {
  const StepResult r = step(cfg({a0}, extruder()), 1);
  REQUIRE(r.derivations.size() == 1);
  const Derivation &d = r.derivations[0];
  CHECK(d.rule == Rule::Open);
  CHECK(d.conclusion.action == Action::bound_out(a0, a1));
  CHECK(d.conclusion.dst == cfg({a0, a1}, nil));
  CHECK(r.complete);
  CHECK_FALSE(check(d, 2));
}

TEST_CASE("nil has no transitions") {
  const StepResult r = step(cfg({a0}, nil), 5);
  CHECK(r.derivations.empty());
  CHECK(r.complete);
}

TEST_CASE("close") {
  const StepResult r = step(cfg({a0}, Term::par(extruder(), Term::inp(f(a0), nil))), 1);
  const Derivation &d = find(r, Rule::CloseL);
  CHECK(d.conclusion.action == Action::tau());
  CHECK(d.conclusion.dst == cfg({a0}, Term::res(Term::par(nil, nil))));
  CHECK_FALSE(check(d, 3));
}

TEST_CASE("communication and input enumeration") {
  // c?(x). x!x. 0 | c!c. 0
  const Term recv = Term::inp(f(a0), Term::out(b0, b0, nil));
  const StepResult r = step(cfg({a0}, Term::par(recv, Term::out(f(a0), f(a0), nil))), 1);
  const Derivation &d = find(r, Rule::CommR);
  CHECK(d.conclusion.action == Action::tau());
  CHECK(d.conclusion.dst.proc == Term::par(Term::out(f(a0), f(a0), nil), nil));
  // Inputs range over the environment and one fresh name.
  const StepResult in = step(cfg({a0}, recv), 1);
  REQUIRE(in.derivations.size() == 2);
  CHECK(in.derivations[0].conclusion.action == Action::in(a0, a0));
  CHECK(in.derivations[1].conclusion.action == Action::in(a0, a1));
  CHECK(in.derivations[1].conclusion.dst.env == NameSet::finite({a0, a1}));
}

TEST_CASE("sum tries every entry and the fallback") {
  const Term s = Term::sum(IndexedFamily<Term>({Term::out(f(a0), f(a0), nil)}, Term::out(f(a0), f(a1), nil)));
  const StepResult r = step(cfg({a0, a1}, s), 1);
  REQUIRE(r.derivations.size() == 2);
  CHECK(r.derivations[0].sum_index == 0u);
  CHECK(r.derivations[1].sum_index == 1u);
  for (const auto &d : r.derivations) CHECK_FALSE(check(d, 2));
}

TEST_CASE("replication and fuel") {
  const Term rep = Term::rep(Term::out(f(a0), f(a0), nil));
  const StepResult none = step(cfg({a0}, rep), 0);
  CHECK(none.derivations.empty());
  CHECK_FALSE(none.complete);
  const StepResult one = step(cfg({a0}, rep), 1);
  REQUIRE(one.derivations.size() == 1);
  CHECK(one.derivations[0].rule == Rule::Rep);
  CHECK(one.derivations[0].conclusion.dst.proc == Term::par(rep, nil));
}

TEST_CASE("ill-formed configurations") {
  CHECK(error_of([] { step(Config{NameSet::evens(), nil}, 1); }) == ErrorKind::IllFormedConfig);
  CHECK(error_of([] { step(cfg({a0}, Term::out(f(a0), b0, nil)), 1); }) == ErrorKind::IllFormedConfig);
}

TEST_CASE("checker rejects bad derivations") {
  Derivation open = step(cfg({a0}, extruder()), 1).derivations[0];
  open.conclusion.src.env = NameSet::finite({a0, a1});
  open.conclusion.dst.env = NameSet::finite({a0, a1});
  auto err = check(open, 0);
  REQUIRE(err);
  CHECK(err->reason == CheckReason::FreshnessViolated);

  Derivation res = step(cfg({a0}, Term::res(Term::out(f(a0), f(a0), nil))), 1).derivations[0];
  REQUIRE(res.rule == Rule::Res);
  res.cofinite->avoid = with(res.cofinite->avoid, res.cofinite->witness);
  err = check(res, 0);
  REQUIRE(err);
  CHECK(err->reason == CheckReason::WitnessInL);

  Derivation out = step(cfg({a0}, Term::out(f(a0), f(a0), nil)), 1).derivations[0];
  out.conclusion.dst.env = NameSet::finite({a0, a5});
  err = check(out, 0);
  REQUIRE(err);
  CHECK(err->reason == CheckReason::EnvMismatch);
}

TEST_CASE("weakening") {
  const Derivation out = step(cfg({a0, a1}, Term::out(f(a0), f(a1), nil)), 1).derivations[0];
  const Derivation w = weaken(out, NameSet::finite({a5}));
  CHECK(w.rule == Rule::Out);
  CHECK(w.conclusion.src == cfg({a0, a1, a5}, Term::out(f(a0), f(a1), nil)));
  CHECK(w.conclusion.dst == cfg({a0, a1, a5}, nil));

  const Derivation open = step(cfg({a0}, extruder()), 1).derivations[0];
  CHECK(error_of([&] { weaken(open, NameSet::finite({a1})); }) == ErrorKind::ExtrusionClash);

  const StepResult r = step(cfg({a0}, Term::par(extruder(), Term::inp(f(a0), nil))), 1);
  const Derivation &close = find(r, Rule::CloseL);
  REQUIRE(close.cofinite);
  CHECK(close.cofinite->witness == a1);
  const Derivation wc = weaken(close, NameSet::finite({a1}));
  CHECK(wc.cofinite->witness == a2);
  CHECK_FALSE(check(wc, 3));
}

TEST_CASE("traces") {
  const Config start = cfg({a0}, extruder());
  const Trace t = replay(start, {Action::bound_out(a0, a1)}, 1);
  REQUIRE(t.steps.size() == 1);
  const Trace renamed = rename_trace(t, a1, a2);
  CHECK(renamed.steps[0].action == Action::bound_out(a0, a2));
  CHECK(renamed.steps[0].config == cfg({a0, a2}, nil));
  // A requested fresh name other than the canonical one still matches.
  CHECK(replay(start, {Action::bound_out(a0, a5)}, 1).steps[0].config == cfg({a0, a5}, nil));

  const Trace empty{start, {}};
  CHECK(rename_trace(empty, a1, a2) == empty);
  CHECK(rename_trace(t, a0, a0) == t);
  CHECK(error_of([&] { rename_trace(t, a0, a1); }) == ErrorKind::NotFreshAtStart);
  CHECK(error_of([&] { replay(start, {Action::out(a0, a0)}, 1); }) == ErrorKind::NoSuchTransition);
  verify_trace(t, 2);
}

TEST_CASE("the naive freshness lemma fails") {
  const Lemma1Counterexample c = counterexample_lemma1();
  const Transition &t = c.transition();
  CHECK(is_fresh(c.m, c.config.proc));
  CHECK(t.src == c.config);
  CHECK(t.action.kind == ActionKind::BoundOut);
  CHECK(t.action.name == c.m);
  CHECK(member(free_names(t.dst.proc), c.m));
  CHECK(t.dst.proc == Term::out(f(c.m), f(c.m), nil));
  CHECK_FALSE(check(c.derivation, 2));
}

TEST_CASE("derivations survive a JSON round trip") {
  const StepResult r = step(cfg({a0}, Term::par(extruder(), Term::inp(f(a0), Term::out(b0, b0, nil)))), 2);
  for (const auto &d : r.derivations) {
    const Derivation back = derivation_from_json(json::parse(to_json(d).dump()));
    CHECK(back == d);
  }
}

TEST_CASE("lts suite") {
  const SuiteReport rep = run_suite("lts-lemmas", 60, 9);
  for (const auto &p : rep.properties) {
    INFO(p.name << ": " << p.first_failure);
    CHECK(p.failed == 0);
  }
}
