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

#include "lnpt/lts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "lnpt/error.hpp"

namespace lnpt {

Action apply(const Permutation &p, const Action &a) {
  if (a.kind == ActionKind::Tau) return a;
  return Action{a.kind, p(a.chan), p(a.name)};
}

NameSet supp(const Action &a) {
  if (a.kind == ActionKind::Tau) return NameSet();
  return NameSet::finite({a.chan, a.name});
}

NameSet extr(const Action &a) {
  return a.kind == ActionKind::BoundOut ? NameSet::finite({a.name}) : NameSet();
}

Config apply(const Permutation &p, const Config &c) { return {apply(p, c.env), apply(p, c.proc)}; }
NameSet supp(const Config &c) { return unite(supp(c.env), supp(c.proc)); }

Transition apply(const Permutation &p, const Transition &t) {
  return {apply(p, t.src), apply(p, t.action), apply(p, t.dst)};
}
NameSet supp(const Transition &t) { return unite(unite(supp(t.src), supp(t.action)), supp(t.dst)); }

const char *to_string(Rule r) {
  switch (r) {
    case Rule::Out: return "Out";
    case Rule::Inp: return "Inp";
    case Rule::Sum: return "Sum";
    case Rule::Res: return "Res";
    case Rule::Open: return "Open";
    case Rule::ParL: return "Par-L";
    case Rule::ParR: return "Par-R";
    case Rule::CommL: return "Comm-L";
    case Rule::CommR: return "Comm-R";
    case Rule::CloseL: return "Close-L";
    case Rule::CloseR: return "Close-R";
    case Rule::Rep: return "Rep";
  }
  return "?";
}

std::optional<Rule> rule_from_string(const std::string &s) {
  for (int i = 0; i <= static_cast<int>(Rule::Rep); ++i)
    if (s == to_string(static_cast<Rule>(i))) return static_cast<Rule>(i);
  return std::nullopt;
}

Derivation apply(const Permutation &p, const Derivation &d) {
  Derivation out;
  out.rule = d.rule;
  out.conclusion = apply(p, d.conclusion);
  out.premises.reserve(d.premises.size());
  for (const auto &prem : d.premises) out.premises.push_back(apply(p, prem));
  if (d.cofinite) out.cofinite = Cofinite{apply(p, d.cofinite->avoid), p(d.cofinite->witness)};
  if (d.extruded) out.extruded = p(*d.extruded);
  out.sum_index = d.sum_index;
  return out;
}

NameSet supp(const Derivation &d) {
  NameSet out = supp(d.conclusion);
  for (const auto &prem : d.premises) out = unite(out, supp(prem));
  if (d.cofinite) out = unite(out, with(d.cofinite->avoid, d.cofinite->witness));
  if (d.extruded) out = with(out, *d.extruded);
  return out;
}

std::vector<Transition> StepResult::transitions() const {
  std::vector<Transition> out;
  out.reserve(derivations.size());
  for (const auto &d : derivations) out.push_back(d.conclusion);
  return out;
}

namespace {

Derivation node(Rule rule, Config src, Action action, Config dst, std::vector<Derivation> premises = {}) {
  Derivation d;
  d.rule = rule;
  d.conclusion = Transition{std::move(src), action, std::move(dst)};
  d.premises = std::move(premises);
  return d;
}

Term close0(Atom x, const Term &t) { return close_at(Level{0}, x, t); }

class Enumerator {
 public:
  bool complete = true;

  // `avoid` collects atoms every fresh choice below must miss: the
  // environment, and the free names of every enclosing term.
  std::vector<Derivation> run(const NameSet &env, const Term &proc, NameSet avoid, unsigned fuel) {
    avoid = unite(avoid, unite(env, supp(proc)));
    auto key = std::make_tuple(env, proc, avoid, fuel);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Derivation> out = dispatch(env, proc, avoid, fuel);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  std::vector<Derivation> dispatch(const NameSet &env, const Term &proc, const NameSet &avoid, unsigned fuel) {
    const Config src{env, proc};
    std::vector<Derivation> out;
    switch (proc.kind()) {
      case TermKind::Nil:
        break;

      case TermKind::Out: {
        Atom c = proc.chan().atom(), n = proc.msg().atom();
        if (env.contains(c)) out.push_back(node(Rule::Out, src, Action::out(c, n), {with(env, n), proc.body()}));
        break;
      }

      case TermKind::Inp: {
        Atom c = proc.chan().atom();
        if (!env.contains(c)) break;
        std::vector<Atom> names = env.elements();
        names.push_back(fresh(avoid));
        for (Atom n : names)
          out.push_back(node(Rule::Inp, src, Action::in(c, n), {with(env, n), open0(n, proc.body())}));
        break;
      }

      case TermKind::Sum: {
        const auto &fam = proc.family();
        for (std::size_t k = 0; k <= fam.fallback_index(); ++k) {
          for (auto &prem : run(env, fam.at(k), avoid, fuel)) {
            Derivation d = node(Rule::Sum, src, prem.conclusion.action, prem.conclusion.dst);
            d.sum_index = k;
            d.premises.push_back(std::move(prem));
            out.push_back(std::move(d));
          }
        }
        break;
      }

      case TermKind::Res: {
        const Atom w = fresh(avoid);
        for (auto &prem : run(env, open0(w, proc.body()), with(avoid, w), fuel)) {
          const Action a = prem.conclusion.action;
          if (!a.mentions(w)) {
            Derivation d = node(Rule::Res, src, a, {prem.conclusion.dst.env, Term::res(close0(w, prem.conclusion.dst.proc))});
            d.cofinite = Cofinite{avoid, w};
            d.premises.push_back(std::move(prem));
            out.push_back(std::move(d));
          } else if (a.kind == ActionKind::Out && a.name == w && a.chan != w) {
            Derivation d = node(Rule::Open, src, Action::bound_out(a.chan, w), prem.conclusion.dst);
            d.extruded = w;
            d.premises.push_back(std::move(prem));
            out.push_back(std::move(d));
          }
        }
        break;
      }

      case TermKind::Par:
        par(src, avoid, fuel, out);
        break;

      case TermKind::Rep: {
        if (fuel == 0) {
          complete = false;
          break;
        }
        for (auto &prem : run(env, Term::par(proc, proc.body()), avoid, fuel - 1)) {
          Derivation d = node(Rule::Rep, src, prem.conclusion.action, prem.conclusion.dst);
          d.premises.push_back(std::move(prem));
          out.push_back(std::move(d));
        }
        break;
      }
    }
    return out;
  }

  void par(const Config &src, const NameSet &avoid, unsigned fuel, std::vector<Derivation> &out) {
    const NameSet &env = src.env;
    const Term &p = src.proc.left();
    const Term &q = src.proc.right();

    for (auto &prem : run(env, p, avoid, fuel)) {
      const Config dst{prem.conclusion.dst.env, Term::par(prem.conclusion.dst.proc, q)};
      Derivation d = node(Rule::ParL, src, prem.conclusion.action, dst, {std::move(prem)});
      out.push_back(std::move(d));
    }
    for (auto &prem : run(env, q, avoid, fuel)) {
      const Config dst{prem.conclusion.dst.env, Term::par(p, prem.conclusion.dst.proc)};
      Derivation d = node(Rule::ParR, src, prem.conclusion.action, dst, {std::move(prem)});
      out.push_back(std::move(d));
    }

    // Each side observes the other.
    const NameSet env_left = unite(env, supp(q));
    const NameSet env_right = unite(env, supp(p));
    const auto left = run(env_left, p, avoid, fuel);
    const auto right = run(env_right, q, avoid, fuel);

    auto communicate = [&](const Derivation &l, const Derivation &r, Rule rule) {
      Config dst{env, Term::par(l.conclusion.dst.proc, r.conclusion.dst.proc)};
      out.push_back(node(rule, src, Action::tau(), std::move(dst), {l, r}));
    };
    for (const auto &l : left) {
      for (const auto &r : right) {
        const Action &la = l.conclusion.action, &ra = r.conclusion.action;
        if (la.kind == ActionKind::Out && ra == Action::in(la.chan, la.name)) communicate(l, r, Rule::CommL);
        if (ra.kind == ActionKind::Out && la == Action::in(ra.chan, ra.name)) communicate(l, r, Rule::CommR);
      }
    }

    // Extrusion from one side to the other: the receiver must accept the
    // freshly extruded name, so it is enumerated again knowing that name.
    auto close = [&](const Derivation &extruder, bool extruder_left) {
      const Action &ea = extruder.conclusion.action;
      const Atom w = ea.name;
      const NameSet recv_env = with(extruder_left ? env_right : env_left, w);
      const Term &receiver = extruder_left ? q : p;
      for (const auto &r : run(recv_env, receiver, with(avoid, w), fuel)) {
        if (r.conclusion.action != Action::in(ea.chan, w)) continue;
        const Term &lres = extruder_left ? extruder.conclusion.dst.proc : r.conclusion.dst.proc;
        const Term &rres = extruder_left ? r.conclusion.dst.proc : extruder.conclusion.dst.proc;
        Config dst{env, Term::res(Term::par(close0(w, lres), close0(w, rres)))};
        Derivation d = extruder_left
                           ? node(Rule::CloseL, src, Action::tau(), std::move(dst), {extruder, r})
                           : node(Rule::CloseR, src, Action::tau(), std::move(dst), {r, extruder});
        d.cofinite = Cofinite{avoid, w};
        out.push_back(std::move(d));
      }
    };
    for (const auto &l : left)
      if (l.conclusion.action.kind == ActionKind::BoundOut) close(l, true);
    for (const auto &r : right)
      if (r.conclusion.action.kind == ActionKind::BoundOut) close(r, false);
  }

  std::map<std::tuple<NameSet, Term, NameSet, unsigned>, std::vector<Derivation>> memo_;
};

// The atom of an action that the source configuration does not know.
std::optional<Atom> fresh_name(const Transition &t) {
  if (t.action.kind == ActionKind::Tau) return std::nullopt;
  const NameSet known = supp(t.src);
  if (!known.contains(t.action.name)) return t.action.name;
  return std::nullopt;
}

Permutation normalizer(const Transition &t) {
  auto f = fresh_name(t);
  if (!f) return identity();
  return transposition(*f, fresh(supp(t.src)));
}

}  // namespace

Transition normalize(const Transition &t) { return apply(normalizer(t), t); }
Derivation normalize(const Derivation &d) { return apply(normalizer(d.conclusion), d); }

StepResult step(const Config &cfg, unsigned fuel) {
  if (!cfg.env.is_finite()) throw Error(ErrorKind::IllFormedConfig, "environment is not finite");
  if (!lc(cfg.proc)) throw Error(ErrorKind::IllFormedConfig, "process is not locally closed");

  Enumerator e;
  std::vector<Derivation> found = e.run(cfg.env, cfg.proc, NameSet(), fuel);
  for (auto &d : found) d = normalize(d);

  auto by_transition = [](const Derivation &a, const Derivation &b) {
    return std::tie(a.conclusion.action, a.conclusion.dst, a.rule) <
           std::tie(b.conclusion.action, b.conclusion.dst, b.rule);
  };
  std::stable_sort(found.begin(), found.end(), by_transition);
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Derivation &a, const Derivation &b) { return a.conclusion == b.conclusion; }),
              found.end());
  std::stable_sort(found.begin(), found.end(), [](const Derivation &a, const Derivation &b) {
    return std::tie(a.rule, a.conclusion.action, a.conclusion.dst) <
           std::tie(b.rule, b.conclusion.action, b.conclusion.dst);
  });
  return StepResult{std::move(found), e.complete};
}

const char *to_string(CheckReason r) {
  switch (r) {
    case CheckReason::WitnessInL: return "WitnessInL";
    case CheckReason::FreshnessViolated: return "FreshnessViolated";
    case CheckReason::EnvMismatch: return "EnvMismatch";
    case CheckReason::RuleShape: return "RuleShape";
  }
  return "?";
}

std::string CheckError::message() const {
  return std::string(to_string(reason)) + " at " + (path.empty() ? "<root>" : path) + ": " + detail;
}

namespace {

class Checker {
 public:
  explicit Checker(unsigned extra) : extra_(extra) {}

  std::optional<CheckError> run(const Derivation &d, const std::string &path) {
    path_ = path;
    if (auto e = node(d)) return e;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      Checker sub(extra_);
      if (auto e = sub.run(d.premises[i], path + "/" + std::to_string(i))) return e;
    }
    return std::nullopt;
  }

 private:
  std::optional<CheckError> fail(CheckReason r, const std::string &detail) {
    return CheckError{path_, r, detail};
  }

  // Compares a premise conclusion against the one the rule demands. An
  // environment difference alone is reported as EnvMismatch.
  std::optional<CheckError> expect_transition(const Transition &got, const Transition &want, const char *what) {
    if (got == want) return std::nullopt;
    if (got.src.proc == want.src.proc && got.dst.proc == want.dst.proc && got.action == want.action)
      return fail(CheckReason::EnvMismatch, std::string(what) + ": environments differ from the rule's");
    return fail(CheckReason::RuleShape, std::string(what) + ": conclusion does not match the rule");
  }

  std::optional<CheckError> arity(const Derivation &d, std::size_t n) {
    if (d.premises.size() != n)
      return fail(CheckReason::RuleShape, std::string(to_string(d.rule)) + " takes " + std::to_string(n) + " premises");
    return std::nullopt;
  }

  std::optional<CheckError> kind(const Term &t, TermKind k) {
    if (t.kind() != k) return fail(CheckReason::RuleShape, "source process has the wrong constructor");
    return std::nullopt;
  }

  // Re-derives cofinite premises at further fresh witnesses by renaming.
  std::optional<CheckError> other_witnesses(const Derivation &d,
                                            const std::function<Transition(std::size_t, Atom)> &want) {
    NameSet used = unite(supp(d), d.cofinite->avoid);
    const Atom w = d.cofinite->witness;
    for (unsigned k = 0; k < extra_; ++k) {
      const Atom w2 = fresh(used);
      used = with(used, w2);
      const Permutation p = transposition(w, w2);
      for (std::size_t i = 0; i < d.premises.size(); ++i) {
        const Derivation moved = apply(p, d.premises[i]);
        if (auto e = expect_transition(moved.conclusion, want(i, w2), "renamed premise")) return e;
        if (auto e = Checker(0).run(moved, path_ + "/" + std::to_string(i) + "@" + std::to_string(w2.index)))
          return e;
      }
    }
    return std::nullopt;
  }

  std::optional<CheckError> cofinite_witness(const Derivation &d) {
    if (!d.cofinite) return fail(CheckReason::RuleShape, "missing cofinite witness");
    const Atom w = d.cofinite->witness;
    if (d.cofinite->avoid.contains(w)) return fail(CheckReason::WitnessInL, "witness lies in the excluded set");
    const Transition &c = d.conclusion;
    if (c.src.env.contains(w) || c.dst.env.contains(w) || !is_fresh(w, c.src.proc) || !is_fresh(w, c.dst.proc) ||
        c.action.mentions(w))
      return fail(CheckReason::FreshnessViolated, "witness occurs in the conclusion");
    return std::nullopt;
  }

  std::optional<CheckError> node(const Derivation &d) {
    const Transition &c = d.conclusion;
    const NameSet &env = c.src.env;
    const Term &proc = c.src.proc;
    const Action &a = c.action;
    if (!env.is_finite() || !c.dst.env.is_finite()) return fail(CheckReason::EnvMismatch, "environment is not finite");

    switch (d.rule) {
      case Rule::Out: {
        if (auto e = arity(d, 0)) return e;
        if (auto e = kind(proc, TermKind::Out)) return e;
        if (!proc.chan().is_free() || !proc.msg().is_free())
          return fail(CheckReason::RuleShape, "output names must be free");
        const Atom ch = proc.chan().atom(), n = proc.msg().atom();
        if (a != Action::out(ch, n)) return fail(CheckReason::RuleShape, "action must be the prefix's output");
        if (!env.contains(ch)) return fail(CheckReason::EnvMismatch, "channel unknown to the observer");
        return expect_transition(c, {c.src, a, {with(env, n), proc.body()}}, "Out");
      }

      case Rule::Inp: {
        if (auto e = arity(d, 0)) return e;
        if (auto e = kind(proc, TermKind::Inp)) return e;
        if (!proc.chan().is_free()) return fail(CheckReason::RuleShape, "input channel must be free");
        const Atom ch = proc.chan().atom();
        if (a.kind != ActionKind::In || a.chan != ch) return fail(CheckReason::RuleShape, "action must be an input on the prefix channel");
        if (!env.contains(ch)) return fail(CheckReason::EnvMismatch, "channel unknown to the observer");
        return expect_transition(c, {c.src, a, {with(env, a.name), open0(a.name, proc.body())}}, "Inp");
      }

      case Rule::Sum: {
        if (auto e = arity(d, 1)) return e;
        if (auto e = kind(proc, TermKind::Sum)) return e;
        if (!d.sum_index) return fail(CheckReason::RuleShape, "missing sum index");
        return expect_transition(d.premises[0].conclusion, {{env, proc.family().at(*d.sum_index)}, a, c.dst},
                                 "Sum premise");
      }

      case Rule::Res: {
        if (auto e = arity(d, 1)) return e;
        if (auto e = kind(proc, TermKind::Res)) return e;
        if (c.dst.proc.kind() != TermKind::Res) return fail(CheckReason::RuleShape, "target must be a restriction");
        if (auto e = cofinite_witness(d)) return e;
        auto want = [&](std::size_t, Atom w) {
          return Transition{{env, open0(w, proc.body())}, a, {c.dst.env, open0(w, c.dst.proc.body())}};
        };
        if (auto e = expect_transition(d.premises[0].conclusion, want(0, d.cofinite->witness), "Res premise"))
          return e;
        return other_witnesses(d, want);
      }

      case Rule::Open: {
        if (auto e = arity(d, 1)) return e;
        if (auto e = kind(proc, TermKind::Res)) return e;
        if (!d.extruded) return fail(CheckReason::RuleShape, "missing extruded name");
        const Atom n = *d.extruded;
        if (a.kind != ActionKind::BoundOut || a.name != n || a.chan == n)
          return fail(CheckReason::RuleShape, "action must be (n)c!n with c != n");
        if (env.contains(n) || !is_fresh(n, proc))
          return fail(CheckReason::FreshnessViolated, "extruded name is not fresh for the process and environment");
        if (c.dst.env != with(env, n)) return fail(CheckReason::EnvMismatch, "observer must learn the extruded name");
        return expect_transition(d.premises[0].conclusion,
                                 {{env, open0(n, proc.body())}, Action::out(a.chan, n), c.dst}, "Open premise");
      }

      case Rule::ParL:
      case Rule::ParR: {
        if (auto e = arity(d, 1)) return e;
        if (auto e = kind(proc, TermKind::Par)) return e;
        const bool left = d.rule == Rule::ParL;
        const Term &mover = left ? proc.left() : proc.right();
        const Term &idle = left ? proc.right() : proc.left();
        const Transition &pc = d.premises[0].conclusion;
        if (!intersect(extr(a), supp(idle)).is_empty())
          return fail(CheckReason::FreshnessViolated, "extruded name occurs in the parallel process");
        if (auto e = expect_transition(pc, {{env, mover}, a, pc.dst}, "Par premise")) return e;
        const Term moved = left ? Term::par(pc.dst.proc, idle) : Term::par(idle, pc.dst.proc);
        return expect_transition(c, {c.src, a, {pc.dst.env, moved}}, "Par");
      }

      case Rule::CommL:
      case Rule::CommR: {
        if (auto e = arity(d, 2)) return e;
        if (auto e = kind(proc, TermKind::Par)) return e;
        const Transition &l = d.premises[0].conclusion, &r = d.premises[1].conclusion;
        const Transition &sender = d.rule == Rule::CommL ? l : r;
        const Transition &receiver = d.rule == Rule::CommL ? r : l;
        if (sender.action.kind != ActionKind::Out ||
            receiver.action != Action::in(sender.action.chan, sender.action.name))
          return fail(CheckReason::RuleShape, "premises must be a matching output and input");
        if (a != Action::tau()) return fail(CheckReason::RuleShape, "communication is silent");
        if (auto e = expect_transition(l, {{unite(env, supp(proc.right())), proc.left()}, l.action, l.dst}, "left premise"))
          return e;
        if (auto e = expect_transition(r, {{unite(env, supp(proc.left())), proc.right()}, r.action, r.dst}, "right premise"))
          return e;
        return expect_transition(c, {c.src, a, {env, Term::par(l.dst.proc, r.dst.proc)}}, "Comm");
      }

      case Rule::CloseL:
      case Rule::CloseR: {
        if (auto e = arity(d, 2)) return e;
        if (auto e = kind(proc, TermKind::Par)) return e;
        if (auto e = cofinite_witness(d)) return e;
        if (a != Action::tau()) return fail(CheckReason::RuleShape, "closing is silent");
        const bool left = d.rule == Rule::CloseL;
        const Transition &l = d.premises[0].conclusion, &r = d.premises[1].conclusion;
        const Action &ea = left ? l.action : r.action;
        if (ea.kind != ActionKind::BoundOut) return fail(CheckReason::RuleShape, "one premise must extrude");
        const Atom ch = ea.chan;
        auto want = [&](std::size_t i, Atom w) {
          const NameSet env_left = unite(env, supp(proc.right()));
          const NameSet env_right = unite(env, supp(proc.left()));
          const Transition &prem = i == 0 ? l : r;
          const Term &dst = open0(w, close0(d.cofinite->witness, prem.dst.proc));
          if ((i == 0) == left) {
            const NameSet e = i == 0 ? env_left : env_right;
            return Transition{{e, i == 0 ? proc.left() : proc.right()}, Action::bound_out(ch, w), {with(e, w), dst}};
          }
          const NameSet e = with(i == 0 ? env_left : env_right, w);
          return Transition{{e, i == 0 ? proc.left() : proc.right()}, Action::in(ch, w), {e, dst}};
        };
        const Atom w = d.cofinite->witness;
        if (auto e = expect_transition(l, want(0, w), "left premise")) return e;
        if (auto e = expect_transition(r, want(1, w), "right premise")) return e;
        const Term target = Term::res(Term::par(close0(w, l.dst.proc), close0(w, r.dst.proc)));
        if (auto e = expect_transition(c, {c.src, a, {env, target}}, "Close")) return e;
        return other_witnesses(d, want);
      }

      case Rule::Rep: {
        if (auto e = arity(d, 1)) return e;
        if (auto e = kind(proc, TermKind::Rep)) return e;
        return expect_transition(d.premises[0].conclusion, {{env, Term::par(proc, proc.body())}, a, c.dst},
                                 "Rep premise");
      }
    }
    return fail(CheckReason::RuleShape, "unknown rule");
  }

  unsigned extra_;
  std::string path_;
};

}  // namespace

std::optional<CheckError> check(const Derivation &d, unsigned extra_witnesses) {
  return Checker(extra_witnesses).run(d, "");
}

namespace {

Derivation weaken_node(const Derivation &d, const NameSet &extra) {
  if (!intersect(extr(d.conclusion.action), extra).is_empty())
    throw Error(ErrorKind::ExtrusionClash, "the action extrudes a name of the added environment");
  Derivation out = d;
  out.conclusion.src.env = unite(d.conclusion.src.env, extra);
  out.conclusion.dst.env = unite(d.conclusion.dst.env, extra);
  if (d.cofinite) {
    // L becomes L' + extra; a witness inside the new L is replaced.
    out.cofinite->avoid = unite(d.cofinite->avoid, extra);
    const Atom w = d.cofinite->witness;
    if (extra.contains(w)) {
      const Atom w2 = fresh(unite(unite(out.cofinite->avoid, supp(d)), extra));
      const Permutation p = transposition(w, w2);
      for (auto &prem : out.premises) prem = apply(p, prem);
      out.cofinite->witness = w2;
    }
  }
  for (auto &prem : out.premises) prem = weaken_node(prem, extra);
  return out;
}

}  // namespace

Derivation weaken(const Derivation &d, const NameSet &extra) {
  if (!extra.is_finite()) throw Error(ErrorKind::BadInput, "added environment must be finite");
  Derivation out = weaken_node(d, extra);
  if (auto e = check(out, 3)) throw Error(ErrorKind::InternalWitnessClash, e->message());
  return out;
}

void verify_trace(const Trace &t, unsigned extra_witnesses) {
  const Config *at = &t.start;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep &s = t.steps[i];
    const Transition &c = s.derivation.conclusion;
    if (c.src != *at || c.action != s.action || c.dst != s.config)
      throw Error(ErrorKind::CheckFailed, "step " + std::to_string(i) + " does not chain");
    if (auto e = check(s.derivation, extra_witnesses))
      throw Error(ErrorKind::CheckFailed, "step " + std::to_string(i) + ": " + e->message());
    at = &s.config;
  }
}

namespace {

// Derivations from `at` matching `want`, smallest target first: with fuel to
// spare, replication also offers repeated unfoldings.
std::vector<Derivation> matching(const Config &at, const Action &want, unsigned fuel) {
  const StepResult r = step(at, fuel);
  std::vector<Derivation> out;
  for (const auto &d : r.derivations)
    if (d.conclusion.action == want) out.push_back(d);
  // The enumerator offers one canonical fresh name; any other fresh name is
  // reached by renaming, which fixes the source configuration.
  const NameSet known = supp(at);
  if (out.empty() && want.kind != ActionKind::Tau && !known.contains(want.name)) {
    for (const auto &d : r.derivations) {
      const Action &got = d.conclusion.action;
      if (got.kind == want.kind && got.chan == want.chan && !known.contains(got.name))
        out.push_back(apply(transposition(got.name, want.name), d));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Derivation &x, const Derivation &y) {
    return x.conclusion.dst.proc.size() < y.conclusion.dst.proc.size();
  });
  return out;
}

class Replayer {
 public:
  Replayer(const std::vector<Action> &actions, unsigned fuel) : actions_(actions), fuel_(fuel) {}

  // Depth-first over the matching transitions; `steps` holds the path so far.
  bool run(const Config &at, std::size_t i, std::vector<TraceStep> &steps) {
    if (i == actions_.size()) return true;
    if (dead_.count({i, at})) return false;
    deepest_ = std::max(deepest_, i);
    for (auto &d : matching(at, actions_[i], fuel_)) {
      Config next = d.conclusion.dst;
      steps.push_back(TraceStep{actions_[i], next, std::move(d)});
      if (run(next, i + 1, steps)) return true;
      steps.pop_back();
    }
    dead_.insert({i, at});
    return false;
  }

  std::size_t deepest() const { return deepest_; }

 private:
  const std::vector<Action> &actions_;
  unsigned fuel_;
  std::size_t deepest_ = 0;
  std::set<std::pair<std::size_t, Config>> dead_;
};

}  // namespace

Trace replay(const Config &start, const std::vector<Action> &actions, unsigned fuel, unsigned extra_witnesses) {
  Trace t{start, {}};
  Replayer r(actions, fuel);
  if (!r.run(start, 0, t.steps))
    throw Error(ErrorKind::NoSuchTransition, "no transition matches step " + std::to_string(r.deepest()));
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    if (auto e = check(t.steps[i].derivation, extra_witnesses))
      throw Error(ErrorKind::CheckFailed, "step " + std::to_string(i) + ": " + e->message());
  return t;
}

Trace rename_trace(const Trace &t, Atom n, Atom m, unsigned extra_witnesses) {
  if (n == m) return t;
  if (!is_fresh(n, t.start) || !is_fresh(m, t.start))
    throw Error(ErrorKind::NotFreshAtStart, "renamed names must be fresh for the start configuration");
  const Permutation p = transposition(n, m);
  Trace out{t.start, {}};
  for (const auto &s : t.steps)
    out.steps.push_back(TraceStep{apply(p, s.action), apply(p, s.config), apply(p, s.derivation)});
  verify_trace(out, extra_witnesses);
  return out;
}

Lemma1Counterexample counterexample_lemma1() {
  const Atom n{0};
  // new c. n!c. c!c. 0
  const Term body = Term::out(Name::free(n), Name::bound(Level{0}),
                              Term::out(Name::bound(Level{0}), Name::bound(Level{0}), Term::nil()));
  const Config cfg{NameSet::finite({n}), Term::res(body)};
  for (const auto &d : step(cfg, 1).derivations) {
    if (d.conclusion.action.kind != ActionKind::BoundOut) continue;
    const Atom w = d.conclusion.action.name;
    const Atom m = fresh(with(supp(cfg), w));
    Derivation moved = apply(transposition(w, m), d);
    if (auto e = check(moved, 2)) throw Error(ErrorKind::CheckFailed, e->message());
    return {cfg, std::move(moved), m};
  }
  throw Error(ErrorKind::CheckFailed, "the extrusion was not derivable");
}

}  // namespace lnpt
