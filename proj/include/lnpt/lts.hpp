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

#ifndef LNPT_LTS_HPP
#define LNPT_LTS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lnpt/term.hpp"

namespace lnpt {

enum class ActionKind : std::uint8_t { Tau, In, Out, BoundOut };

/// Transition label: tau, c?n, c!n or (n)c!n. All names are free atoms.
struct Action {
  ActionKind kind = ActionKind::Tau;
  Atom chan;
  Atom name;

  static Action tau() { return {}; }
  static Action in(Atom c, Atom n) { return {ActionKind::In, c, n}; }
  static Action out(Atom c, Atom n) { return {ActionKind::Out, c, n}; }
  static Action bound_out(Atom c, Atom n) { return {ActionKind::BoundOut, c, n}; }

  bool mentions(Atom a) const { return kind != ActionKind::Tau && (chan == a || name == a); }

  friend bool operator==(const Action &, const Action &) = default;
  friend auto operator<=>(const Action &, const Action &) = default;
};

Action apply(const Permutation &p, const Action &a);
NameSet supp(const Action &a);
/// Names extruded by an action: {n} for (n)c!n, empty otherwise.
NameSet extr(const Action &a);

/// <env; proc>: a process together with the channels its observer knows.
struct Config {
  NameSet env;
  Term proc;

  friend bool operator==(const Config &, const Config &) = default;
  friend auto operator<=>(const Config &, const Config &) = default;
};

Config apply(const Permutation &p, const Config &c);
NameSet supp(const Config &c);

struct Transition {
  Config src;
  Action action;
  Config dst;

  friend bool operator==(const Transition &, const Transition &) = default;
  friend auto operator<=>(const Transition &, const Transition &) = default;
};

Transition apply(const Permutation &p, const Transition &t);
NameSet supp(const Transition &t);

enum class Rule : std::uint8_t { Out, Inp, Sum, Res, Open, ParL, ParR, CommL, CommR, CloseL, CloseR, Rep };

const char *to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string &s);

/// Cofinite premise evidence: the premises were derived at `witness`, which
/// stands for every atom outside `avoid`.
struct Cofinite {
  NameSet avoid;
  Atom witness;

  friend bool operator==(const Cofinite &, const Cofinite &) = default;
};

/// A proof tree for one transition.
struct Derivation {
  Rule rule = Rule::Out;
  Transition conclusion;
  std::vector<Derivation> premises;
  std::optional<Cofinite> cofinite;       // Res, Close-L, Close-R
  std::optional<Atom> extruded;           // Open
  std::optional<std::size_t> sum_index;   // Sum

  friend bool operator==(const Derivation &, const Derivation &) = default;
};

Derivation apply(const Permutation &p, const Derivation &d);
/// Every atom mentioned anywhere in the tree.
NameSet supp(const Derivation &d);

struct StepResult {
  std::vector<Derivation> derivations;
  /// False when some replication was left unexplored for lack of fuel.
  bool complete = true;

  std::vector<Transition> transitions() const;
};

/// Enumerates the transitions of a configuration.
///
/// Inputs range over the environment plus one fresh name, sums try each
/// entry and the fallback once, restriction and closing derive their
/// premises at the least atom fresh for everything in scope, and each
/// replication unfolds *P into *P | P at the cost of one unit of fuel. Every
/// fresh name in an action is renamed to the least atom fresh for the source
/// configuration, and results are deduplicated by transition and sorted by
/// (rule, action, target).
///
/// Throws Error(IllFormedConfig) when env is infinite or proc is not locally closed.
StepResult step(const Config &cfg, unsigned fuel);

/// Renames the fresh name of a transition's action (if any) to the least atom
/// fresh for the source configuration.
Transition normalize(const Transition &t);
Derivation normalize(const Derivation &d);

enum class CheckReason { WitnessInL, FreshnessViolated, EnvMismatch, RuleShape };
const char *to_string(CheckReason r);

struct CheckError {
  std::string path;
  CheckReason reason;
  std::string detail;

  std::string message() const;
};

/// Validates every node of a derivation. Cofinite premises are checked at the
/// recorded witness and additionally at `extra_witnesses` further fresh
/// atoms, by renaming the recorded premises.
std::optional<CheckError> check(const Derivation &d, unsigned extra_witnesses);

/// Derivation of <env + extra; P> -a-> <env' + extra; Q> from one of
/// <env; P> -a-> <env'; Q>. Cofinite nodes whose witness lies in `extra` are
/// moved to a fresher witness. Throws Error(ExtrusionClash) when the action
/// extrudes a name of `extra`.
Derivation weaken(const Derivation &d, const NameSet &extra);

struct TraceStep {
  Action action;
  Config config;
  Derivation derivation;

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

struct Trace {
  Config start;
  std::vector<TraceStep> steps;

  const Config &last() const { return steps.empty() ? start : steps.back().config; }

  friend bool operator==(const Trace &, const Trace &) = default;
};

/// Replays `actions` from `start`. Matching transitions are tried smallest
/// target first, backtracking when a later action cannot follow. A requested
/// fresh name that differs from the enumerator's canonical one is matched up
/// to renaming of fresh names. Throws Error(NoSuchTransition) naming the
/// furthest step that could not be matched.
Trace replay(const Config &start, const std::vector<Action> &actions, unsigned fuel,
             unsigned extra_witnesses = 2);

/// Checks that each step's derivation starts where the previous step ended
/// and passes check. Throws Error(CheckFailed) otherwise.
void verify_trace(const Trace &t, unsigned extra_witnesses);

/// Applies (n m) to every step after the start. Unless n = m, both names must
/// be fresh for the start configuration (Error(NotFreshAtStart)); the result
/// is verified.
Trace rename_trace(const Trace &t, Atom n, Atom m, unsigned extra_witnesses = 2);

/// A witness that "if m # P and P -(c)n!c-> Q then m # Q" fails.
struct Lemma1Counterexample {
  Config config;
  Derivation derivation;
  Atom m;

  const Transition &transition() const { return derivation.conclusion; }
};

Lemma1Counterexample counterexample_lemma1();

}  // namespace lnpt

#endif
