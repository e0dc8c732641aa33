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

#include "lnpt/serialize.hpp"

#include "lnpt/error.hpp"

namespace lnpt {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::BadInput, what); }

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Atom atom_from_json(const json &j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad("atom must be a natural number");
  const auto v = j.get<unsigned long long>();
  if (v > UINT32_MAX) bad("atom index out of range");
  return Atom{static_cast<std::uint32_t>(v)};
}

json atoms_to_json(const std::vector<Atom> &atoms) {
  json out = json::array();
  for (Atom a : atoms) out.push_back(a.index);
  return out;
}

std::vector<Atom> atoms_from_json(const json &j) {
  if (!j.is_array()) bad("expected an array of atoms");
  std::vector<Atom> out;
  for (const auto &e : j) out.push_back(atom_from_json(e));
  return out;
}

json finite_to_json(const NameSet &s) { return atoms_to_json(s.elements()); }
NameSet finite_from_json(const json &j) { return NameSet::finite(atoms_from_json(j)); }

Atom named_atom(const json &j, const SymbolTable *symtab) {
  if (!j.is_string()) return atom_from_json(j);
  const std::string s = j.get<std::string>();
  if (symtab)
    if (auto a = symtab->lookup(s)) return *a;
  // Unbound x<i> names atom i.
  if (s.size() > 1 && s[0] == 'x' && s.find_first_not_of("0123456789", 1) == std::string::npos)
    return Atom{static_cast<std::uint32_t>(std::stoul(s.substr(1)))};
  bad("unknown name '" + s + "'");
}

}  // namespace

json to_json(const Permutation &p) {
  json cycles = json::array();
  for (const auto &c : p.cycles()) cycles.push_back(atoms_to_json(c));
  return {{"cycles", cycles}};
}

Permutation permutation_from_json(const json &j) {
  const json &cycles = field(j, "cycles");
  if (!cycles.is_array()) bad("cycles must be an array");
  std::vector<std::vector<Atom>> cs;
  for (const auto &c : cycles) cs.push_back(atoms_from_json(c));
  return Permutation::from_cycles(cs);
}

json to_json(const NameSet &s) {
  std::vector<Atom> add, remove;
  for (const auto &[a, in] : s.exceptions()) (in ? add : remove).push_back(a);
  return {{"mod", s.modulus()}, {"res", s.residues()}, {"add", atoms_to_json(add)}, {"remove", atoms_to_json(remove)}};
}

NameSet nameset_from_json(const json &j) {
  const json &mod = field(j, "mod");
  if (!mod.is_number_unsigned() || mod.get<std::uint64_t>() == 0 || mod.get<std::uint64_t>() > 1u << 20)
    bad("mod must be a positive integer");
  std::vector<std::uint32_t> res;
  for (const auto &r : field(j, "res")) {
    if (!r.is_number_unsigned()) bad("residues must be natural numbers");
    res.push_back(r.get<std::uint32_t>());
  }
  std::map<Atom, bool> exc;
  if (j.contains("remove"))
    for (Atom a : atoms_from_json(j.at("remove"))) exc[a] = false;
  if (j.contains("add"))
    for (Atom a : atoms_from_json(j.at("add"))) exc[a] = true;
  return NameSet::from_parts(mod.get<std::uint32_t>(), res, exc);
}

json to_json(const Name &n) {
  return n.is_free() ? json{{"free", n.atom().index}} : json{{"bound", n.level().depth}};
}

Name name_from_json(const json &j) {
  if (j.is_object() && j.contains("free")) return Name::free(atom_from_json(j.at("free")));
  if (j.is_object() && j.contains("bound")) return Name::bound(Level{atom_from_json(j.at("bound")).index});
  bad("name must be {\"free\": i} or {\"bound\": i}");
}

json to_json(const Term &t) {
  switch (t.kind()) {
    case TermKind::Nil:
      return {{"t", "nil"}};
    case TermKind::Sum: {
      json entries = json::array();
      for (const auto &e : t.family().entries()) entries.push_back(to_json(e));
      return {{"t", "sum"}, {"entries", entries}, {"default", to_json(t.family().fallback())}};
    }
    case TermKind::Inp:
      return {{"t", "in"}, {"chan", to_json(t.chan())}, {"body", to_json(t.body())}};
    case TermKind::Out:
      return {{"t", "out"}, {"chan", to_json(t.chan())}, {"msg", to_json(t.msg())}, {"cont", to_json(t.body())}};
    case TermKind::Par:
      return {{"t", "par"}, {"left", to_json(t.left())}, {"right", to_json(t.right())}};
    case TermKind::Res:
      return {{"t", "new"}, {"body", to_json(t.body())}};
    case TermKind::Rep:
      return {{"t", "rep"}, {"body", to_json(t.body())}};
  }
  return nullptr;
}

Term term_from_json(const json &j) {
  const json &tag = field(j, "t");
  if (!tag.is_string()) bad("term tag must be a string");
  const std::string t = tag.get<std::string>();
  if (t == "nil") return Term::nil();
  if (t == "sum") {
    std::vector<Term> entries;
    for (const auto &e : field(j, "entries")) entries.push_back(term_from_json(e));
    return Term::sum(IndexedFamily<Term>(std::move(entries), term_from_json(field(j, "default"))));
  }
  if (t == "in") return Term::inp(name_from_json(field(j, "chan")), term_from_json(field(j, "body")));
  if (t == "out")
    return Term::out(name_from_json(field(j, "chan")), name_from_json(field(j, "msg")), term_from_json(field(j, "cont")));
  if (t == "par") return Term::par(term_from_json(field(j, "left")), term_from_json(field(j, "right")));
  if (t == "new") return Term::res(term_from_json(field(j, "body")));
  if (t == "rep") return Term::rep(term_from_json(field(j, "body")));
  bad("unknown term tag '" + t + "'");
}

json to_json(const Action &a) {
  switch (a.kind) {
    case ActionKind::Tau: return json::array({"tau"});
    case ActionKind::In: return json::array({"in", a.chan.index, a.name.index});
    case ActionKind::Out: return json::array({"out", a.chan.index, a.name.index});
    case ActionKind::BoundOut: return json::array({"bout", a.chan.index, a.name.index});
  }
  return nullptr;
}

Action action_from_json(const json &j, const SymbolTable *symtab) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) bad("action must be a tagged array");
  const std::string tag = j[0].get<std::string>();
  if (tag == "tau") {
    if (j.size() != 1) bad("tau takes no names");
    return Action::tau();
  }
  if (j.size() != 3) bad("action '" + tag + "' takes a channel and a name");
  const Atom c = named_atom(j[1], symtab), n = named_atom(j[2], symtab);
  if (tag == "in") return Action::in(c, n);
  if (tag == "out") return Action::out(c, n);
  if (tag == "bout") {
    if (c == n) bad("bound output needs distinct channel and name");
    return Action::bound_out(c, n);
  }
  bad("unknown action tag '" + tag + "'");
}

json to_json(const Config &c) { return {{"env", finite_to_json(c.env)}, {"proc", to_json(c.proc)}}; }

Config config_from_json(const json &j) {
  return {finite_from_json(field(j, "env")), term_from_json(field(j, "proc"))};
}

json to_json(const Transition &t) {
  return {{"src", to_json(t.src)}, {"action", to_json(t.action)}, {"dst", to_json(t.dst)}};
}

Transition transition_from_json(const json &j) {
  return {config_from_json(field(j, "src")), action_from_json(field(j, "action")), config_from_json(field(j, "dst"))};
}

json to_json(const Derivation &d) {
  json premises = json::array();
  for (const auto &p : d.premises) premises.push_back(to_json(p));
  json side = json::object();
  if (d.extruded) side["extruded"] = d.extruded->index;
  if (d.sum_index) side["index"] = *d.sum_index;
  json out = {{"rule", to_string(d.rule)}, {"conclusion", to_json(d.conclusion)}, {"premises", premises}, {"side", side}};
  if (d.cofinite) out["cofinite"] = {{"L", finite_to_json(d.cofinite->avoid)}, {"witness", d.cofinite->witness.index}};
  return out;
}

Derivation derivation_from_json(const json &j) {
  Derivation d;
  const json &rule = field(j, "rule");
  if (!rule.is_string()) bad("rule must be a string");
  auto r = rule_from_string(rule.get<std::string>());
  if (!r) bad("unknown rule '" + rule.get<std::string>() + "'");
  d.rule = *r;
  d.conclusion = transition_from_json(field(j, "conclusion"));
  for (const auto &p : field(j, "premises")) d.premises.push_back(derivation_from_json(p));
  if (j.contains("cofinite") && !j.at("cofinite").is_null()) {
    const json &c = j.at("cofinite");
    d.cofinite = Cofinite{finite_from_json(field(c, "L")), atom_from_json(field(c, "witness"))};
  }
  if (j.contains("side")) {
    const json &side = j.at("side");
    if (side.contains("extruded")) d.extruded = atom_from_json(side.at("extruded"));
    if (side.contains("index")) d.sum_index = atom_from_json(side.at("index")).index;
  }
  return d;
}

json to_json(const Trace &t, const SymbolTable &symtab) {
  json names = json::object();
  for (const auto &[name, a] : symtab.names()) names[name] = a.index;
  json steps = json::array();
  for (const auto &s : t.steps)
    steps.push_back({{"action", to_json(s.action)}, {"config", to_json(s.config)}, {"derivation", to_json(s.derivation)}});
  return {{"symtab", names}, {"start", to_json(t.start)}, {"steps", steps}};
}

Trace trace_from_json(const json &j, SymbolTable *symtab) {
  if (symtab && j.contains("symtab"))
    for (const auto &[name, a] : j.at("symtab").items()) symtab->bind(name, atom_from_json(a));
  Trace t{config_from_json(field(j, "start")), {}};
  for (const auto &s : field(j, "steps"))
    t.steps.push_back(TraceStep{action_from_json(field(s, "action")), config_from_json(field(s, "config")),
                                derivation_from_json(field(s, "derivation"))});
  return t;
}

}  // namespace lnpt
