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

// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "lnpt/error.hpp"
#include "lnpt/gen.hpp"
#include "lnpt/suites.hpp"
#include "lnpt/syntax.hpp"
#include "support/oracle.hpp"

using namespace lnpt;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome suite_outcome(const std::string &name, std::size_t cases) {
  const SuiteReport r = run_suite(name, cases, kSeed);
  std::ostringstream s;
  std::size_t checked = 0;
  for (const auto &p : r.properties) checked += p.passed;
  s << r.properties.size() << " properties, " << checked << " cases checked, " << r.failures() << " failures";
  // Every property must have checked all cases, not merely avoided failures.
  bool full = true;
  for (const auto &p : r.properties) {
    if (p.failed) s << "; " << p.name << " " << p.first_failure;
    if (p.passed != cases) {
      full = false;
      s << "; " << p.name << " checked only " << p.passed;
    }
  }
  return {r.ok() && full, s.str()};
}

// Every required instance appears among the suite's properties with all cases checked.
bool covers(const std::string &suite, std::size_t cases, const std::vector<std::string> &prefixes) {
  const SuiteReport r = run_suite(suite, cases, kSeed);
  for (const auto &pre : prefixes) {
    bool found = false;
    for (const auto &p : r.properties)
      if (p.name.rfind(pre, 0) == 0) found = found || p.passed == cases;
    if (!found) return false;
  }
  return true;
}

gen::TermOptions lts_terms() {
  gen::TermOptions o;
  o.depth = 3;
  o.atom_bound = 4;
  return o;
}

Outcome c1() {
  const std::size_t n = 1000;
  Outcome o = suite_outcome("fig2-laws", n);
  if (!covers("fig2-laws", n, {"Atom", "Permutation", "pair", "list", "NameSet", "IndexedFamily", "Term", "Action",
                               "Config"}))
    return {false, "missing instance"};
  return o;
}

Outcome c2() {
  const NameSet u = unite(NameSet::odds(), NameSet::evens());
  const bool empty = supp(u).is_empty() && oracle::sampled_supp(u, 12).is_empty();
  const bool x0 = supp(NameSet::odds()).contains(Atom{0}) && oracle::sampled_supp(NameSet::odds(), 12).contains(Atom{0});
  return {empty && x0, std::string("supp(Odd u Even) empty: ") + (empty ? "yes" : "no") +
                           ", a0 in supp(Odd): " + (x0 ? "yes" : "no")};
}

Outcome c3() {
  Outcome o = suite_outcome("sect3-lemmas", 1000);
  std::size_t disagreements = 0, values = 0;
  gen::TermOptions opts;
  opts.depth = 3;
  opts.atom_bound = 10;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = gen::stream(kSeed, 99, k);
    const bool agree[] = {
        oracle::supp_matches_definition(gen::nameset(rng, 10), 12),
        oracle::supp_matches_definition(gen::permutation(rng, 4, 10), 12),
        oracle::supp_matches_definition(gen::any_term(rng, opts), 12),
        oracle::supp_matches_definition(gen::family(rng, opts), 12),
        oracle::supp_matches_definition(std::pair{gen::action(rng, 10), gen::nameset(rng, 10)}, 12),
    };
    for (bool a : agree) {
      ++values;
      disagreements += !a;
    }
  }
  o.detail += "; oracle: " + std::to_string(values) + " values, " + std::to_string(disagreements) + " disagreements";
  o.ok = o.ok && disagreements == 0;
  return o;
}

Outcome c4() { return suite_outcome("fig3-axioms", 1000); }

Outcome c5() {
  const Parsed p = parse("new c. n!c. 0");
  const Atom n = *p.symtab.lookup("n");
  const StepResult r = step(Config{NameSet::finite({n}), p.term}, 8);
  if (r.derivations.size() != 1) return {false, std::to_string(r.derivations.size()) + " transitions"};
  const Transition &t = r.derivations[0].conclusion;
  const Atom x1{1};
  const bool ok = r.derivations[0].rule == Rule::Open && t.action == Action::bound_out(n, x1) &&
                  t.dst == Config{NameSet::finite({n, x1}), Term::nil()};
  return {ok, "(x1) n!x1 to <{n, x1}; 0>"};
}

Outcome c6() {
  const Parsed p = parse("*(new n. c?(x). x!n. 0)");
  SymbolTable st = p.symtab;
  const Atom c = *st.lookup("c");
  const Config start{NameSet::finite({c}), p.term};
  const Atom y1 = st.intern("y1", supp(start)), n1 = st.intern("n1"), y2 = st.intern("y2"), n2 = st.intern("n2");
  const Trace t = replay(start, {Action::in(c, y1), Action::bound_out(y1, n1), Action::in(c, y2), Action::bound_out(y2, n2)}, 2);
  verify_trace(t, 3);
  // P | new n. y1!n. 0, with P the replicated process.
  const Term expected1 = Term::par(p.term, parse("new n. y1!n. 0", st).term);
  const bool step1 = t.steps[0].config.proc == expected1;
  const bool step2 = t.steps[1].config.proc == Term::par(p.term, Term::nil());
  const bool envs = t.steps[3].config.env == NameSet::finite({c, y1, n1, y2, n2});
  return {step1 && step2 && envs, "after c?y1: " + print(t.steps[0].config.proc, st) +
                                      "; after (n1)y1!n1: " + print(t.steps[1].config.proc, st)};
}

struct Corpus {
  std::vector<Derivation> derivations;
};

const Corpus &corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (std::uint64_t k = 0; k < 200; ++k) {
      auto rng = gen::stream(kSeed, 7, k);
      const Config cfg = gen::config(rng, lts_terms());
      for (auto &d : step(cfg, 2).derivations) out.derivations.push_back(std::move(d));
    }
    return out;
  }();
  return c;
}

Outcome c7() {
  std::size_t weakened = 0, clashes = 0, failures = 0;
  std::string first;
  std::uint64_t k = 0;
  for (const auto &d : corpus().derivations) {
    auto rng = gen::stream(kSeed, 8, k++);
    const NameSet ex = extr(d.conclusion.action);
    for (int r = 0; r < 5; ++r) {
      const NameSet extra = difference(gen::finite_set(rng, 4, 8), ex);
      try {
        const Derivation w = weaken(d, extra);
        const auto err = check(w, 3);
        const bool envs = w.conclusion.src.env == unite(d.conclusion.src.env, extra) &&
                          w.conclusion.dst.env == unite(d.conclusion.dst.env, extra);
        if (err || !envs) {
          ++failures;
          if (first.empty()) first = err ? err->message() : "environment mismatch";
        }
        ++weakened;
      } catch (const Error &e) {
        ++failures;
        if (first.empty()) first = e.what();
      }
    }
    if (d.conclusion.action.kind == ActionKind::BoundOut) {
      const NameSet extra = with(gen::finite_set(rng, 3, 8), d.conclusion.action.name);
      try {
        weaken(d, extra);
        ++failures;
        if (first.empty()) first = "clash not reported";
      } catch (const Error &e) {
        if (e.kind() == ErrorKind::ExtrusionClash)
          ++clashes;
        else
          ++failures;
      }
    }
  }
  return {failures == 0 && weakened > 0 && clashes > 0,
          std::to_string(corpus().derivations.size()) + " transitions, " + std::to_string(weakened) + " weakenings, " +
              std::to_string(clashes) + " clashes, " + std::to_string(failures) + " failures" +
              (first.empty() ? "" : "; " + first)};
}

Outcome c8() {
  std::size_t bad = 0;
  for (const auto &d : corpus().derivations) bad += !term_lc(d.conclusion.dst.proc);
  return {bad == 0, std::to_string(corpus().derivations.size()) + " targets, " + std::to_string(bad) + " not lc"};
}

Outcome c9() {
  std::size_t traces = 0, failures = 0, attempts = 0;
  std::string first;
  while (traces < 100 && attempts < 5000) {
    auto rng = gen::stream(kSeed, 9, attempts++);
    const Config start = gen::config(rng, lts_terms());
    std::vector<Action> actions;
    Config cur = start;
    NameSet seen = supp(start);
    for (int k = 0; k < 3; ++k) {
      const auto ts = step(cur, 2).transitions();
      if (ts.empty()) break;
      const Transition &t = ts[std::uniform_int_distribution<std::size_t>(0, ts.size() - 1)(rng)];
      actions.push_back(t.action);
      cur = t.dst;
      seen = unite(seen, supp(cur));
    }
    if (actions.size() != 3) continue;
    ++traces;
    // Prefer a name the trace actually introduces.
    const NameSet introduced = difference(seen, supp(start));
    const Atom n = introduced.is_empty() ? fresh(seen) : *introduced.least();
    const Atom m = complement(with(seen, n)).enumerate(1 + std::uniform_int_distribution<std::size_t>(0, 3)(rng)).back();
    try {
      const Trace t = replay(start, actions, 2);
      const Trace r = rename_trace(t, n, m, 3);
      verify_trace(r, 3);
    } catch (const Error &e) {
      ++failures;
      if (first.empty()) first = e.what();
    }
  }
  return {traces == 100 && failures == 0, std::to_string(traces) + " traces, " + std::to_string(failures) +
                                              " failures" + (first.empty() ? "" : "; " + first)};
}

Outcome c10() {
  const Lemma1Counterexample c = counterexample_lemma1();
  const Transition &t = c.transition();
  const bool fresh_in_p = is_fresh(c.m, c.config.proc);
  const bool derivable = t.src == c.config && t.action.kind == ActionKind::BoundOut && t.action.name == c.m &&
                         !check(c.derivation, 3);
  const bool in_q = member(free_names(t.dst.proc), c.m);
  SymbolTable st;
  return {fresh_in_p && derivable && in_q,
          "m = a" + std::to_string(c.m.index) + ", P = " + print(c.config.proc, st) + ", Q = " + print(t.dst.proc, st)};
}

Outcome c11() {
  std::size_t failures = 0, transitions = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = gen::stream(kSeed, 11, k);
    const Config cfg = gen::config(rng, lts_terms());
    const Permutation p = gen::permutation(rng, 4, 8);
    std::set<Transition> expected;
    for (const auto &t : step(cfg, 2).transitions()) expected.insert(normalize(oracle::act(p, t)));
    const auto got = step(oracle::act(p, cfg), 2).transitions();
    transitions += got.size();
    failures += std::set<Transition>(got.begin(), got.end()) != expected || got.size() != expected.size();
  }
  return {failures == 0, "200 configs, " + std::to_string(transitions) + " transitions, " +
                             std::to_string(failures) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"permutation-type laws", c1},   {"Odd/Even support values", c2}, {"support lemma suite", c3},
      {"locally nameless axioms", c4}, {"scope extrusion example", c5}, {"replicated server trace prefix", c6},
      {"weakening", c7},               {"targets locally closed", c8},  {"trace renaming", c9},
      {"naive freshness refuted", c10}, {"enumerator equivariance", c11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto begin = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << k + 1 << " " << criteria[k].first << ": " << o.detail << " ("
              << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
