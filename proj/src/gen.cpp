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

#include "lnpt/gen.hpp"

#include <vector>

namespace lnpt::gen {

namespace {

std::uint32_t below(Rng &rng, std::uint32_t n) { return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng); }
bool chance(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

class TermBuilder {
 public:
  TermBuilder(Rng &rng, const TermOptions &opts) : rng_(rng), opts_(opts) {}

  Term build() {
    std::vector<Atom> scope;
    const unsigned free_count = 1 + below(rng_, 3);
    for (unsigned k = 0; k < free_count; ++k) scope.push_back(atom(rng_, opts_.atom_bound));
    free_count_ = free_count;
    return term(opts_.depth, scope);
  }

 private:
  // Binder atoms sit above every free atom the options can produce.
  Atom binder() { return Atom{opts_.atom_bound + 1000 + next_binder_++}; }

  Name pick(const std::vector<Atom> &scope) {
    if (opts_.dangling > 0 && chance(rng_, opts_.dangling)) return Name::bound(Level{below(rng_, 3)});
    return Name::free(scope[below(rng_, static_cast<std::uint32_t>(scope.size()))]);
  }

  // Channels favour the outer free atoms, so that parallel components
  // generated separately tend to share them.
  Name channel(const std::vector<Atom> &scope) {
    if (opts_.dangling == 0 && chance(rng_, 0.6)) return Name::free(scope[below(rng_, free_count_)]);
    return pick(scope);
  }

  Term under_binder(unsigned depth, std::vector<Atom> scope) {
    const Atom b = binder();
    scope.push_back(b);
    return close_at(Level{0}, b, term(depth, scope));
  }

  Term term(unsigned depth, const std::vector<Atom> &scope) {
    if (depth == 0) {
      if (chance(rng_, 0.6)) return Term::nil();
      return Term::out(channel(scope), pick(scope), Term::nil());
    }
    switch (below(rng_, 10)) {
      case 0:
        return Term::nil();
      case 1:
      case 2:
        return Term::out(channel(scope), pick(scope), term(depth - 1, scope));
      case 3:
      case 4: {
        const Name c = channel(scope);
        return Term::inp(c, under_binder(depth - 1, scope));
      }
      case 5:
      case 6:
        return Term::res(under_binder(depth - 1, scope));
      case 7:
        return Term::par(term(depth - 1, scope), term(depth - 1, scope));
      case 8:
        if (opts_.sums) {
          std::vector<Term> entries;
          const unsigned n = below(rng_, 3);
          for (unsigned k = 0; k < n; ++k) entries.push_back(term(depth - 1, scope));
          return Term::sum(IndexedFamily<Term>(std::move(entries), term(depth - 1, scope)));
        }
        return Term::par(term(depth - 1, scope), term(depth - 1, scope));
      default:
        if (opts_.replication) return Term::rep(term(depth - 1, scope));
        return Term::out(channel(scope), pick(scope), term(depth - 1, scope));
    }
  }

  Rng &rng_;
  const TermOptions &opts_;
  std::uint32_t next_binder_ = 0;
  std::uint32_t free_count_ = 1;
};

}  // namespace

Rng stream(std::uint64_t seed, std::uint64_t property, std::uint64_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  return Rng(seq);
}

Atom atom(Rng &rng, std::uint32_t bound) { return Atom{below(rng, bound)}; }

Permutation permutation(Rng &rng, unsigned max_swaps, std::uint32_t bound) {
  Permutation p;
  const unsigned n = below(rng, max_swaps + 1);
  for (unsigned k = 0; k < n; ++k) p = compose(transposition(atom(rng, bound), atom(rng, bound)), p);
  return p;
}

NameSet finite_set(Rng &rng, unsigned max_size, std::uint32_t bound) {
  std::vector<Atom> atoms;
  const unsigned n = below(rng, max_size + 1);
  for (unsigned k = 0; k < n; ++k) atoms.push_back(atom(rng, bound));
  return NameSet::finite(atoms);
}

NameSet nameset(Rng &rng, std::uint32_t bound) {
  const std::uint32_t modulus = 1 + below(rng, 4);
  std::vector<std::uint32_t> residues;
  for (std::uint32_t r = 0; r < modulus; ++r)
    if (chance(rng, 0.5)) residues.push_back(r);
  std::map<Atom, bool> exceptions;
  const unsigned n = below(rng, 4);
  for (unsigned k = 0; k < n; ++k) exceptions[atom(rng, bound)] = chance(rng, 0.5);
  return NameSet::from_parts(modulus, residues, exceptions);
}

Term lc_term(Rng &rng, const TermOptions &opts) {
  TermOptions o = opts;
  o.dangling = 0;
  return TermBuilder(rng, o).build();
}

Term any_term(Rng &rng, const TermOptions &opts) {
  TermOptions o = opts;
  if (o.dangling == 0) o.dangling = 0.08;
  return TermBuilder(rng, o).build();
}

IndexedFamily<Term> family(Rng &rng, const TermOptions &opts) {
  TermOptions o = opts;
  o.depth = opts.depth > 1 ? opts.depth - 1 : 1;
  std::vector<Term> entries;
  const unsigned n = below(rng, 4);
  for (unsigned k = 0; k < n; ++k) entries.push_back(chance(rng, 0.5) ? any_term(rng, o) : lc_term(rng, o));
  return IndexedFamily<Term>(std::move(entries), lc_term(rng, o));
}

Name name(Rng &rng, std::uint32_t bound) {
  if (chance(rng, 0.3)) return Name::bound(Level{below(rng, 3)});
  return Name::free(atom(rng, bound));
}

Action action(Rng &rng, std::uint32_t bound) {
  const Atom c = atom(rng, bound), n = atom(rng, bound);
  switch (below(rng, 4)) {
    case 0: return Action::tau();
    case 1: return Action::in(c, n);
    case 2: return Action::out(c, n);
    default: return c == n ? Action::out(c, n) : Action::bound_out(c, n);
  }
}

Config config(Rng &rng, const TermOptions &opts) {
  // Half the time, two components that may interact.
  Term proc = lc_term(rng, opts);
  if (chance(rng, 0.5)) proc = Term::par(std::move(proc), lc_term(rng, opts));
  std::vector<Atom> env;
  for (Atom a : proc.free_atoms())
    if (chance(rng, 0.7)) env.push_back(a);
  if (chance(rng, 0.3)) env.push_back(atom(rng, opts.atom_bound));
  return Config{NameSet::finite(env), std::move(proc)};
}

}  // namespace lnpt::gen
