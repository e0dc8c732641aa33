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

#ifndef LNPT_SERIALIZE_HPP
#define LNPT_SERIALIZE_HPP

#include <json.hpp>

#include "lnpt/lts.hpp"
#include "lnpt/syntax.hpp"

namespace lnpt {

using json = nlohmann::json;

// Wire formats. Atoms are written as their indices.
//   Permutation  {"cycles": [[i, j, ...], ...]}
//   NameSet      {"mod": m, "res": [...], "add": [...], "remove": [...]}
//   Name         {"free": i} | {"bound": i}
//   Term         {"t": "nil"} | {"t": "sum", "entries": [...], "default": T}
//                | {"t": "in", "chan": N, "body": T} | {"t": "out", "chan": N, "msg": N, "cont": T}
//                | {"t": "par", "left": T, "right": T} | {"t": "new", "body": T} | {"t": "rep", "body": T}
//   Action       ["tau"] | ["in", c, n] | ["out", c, n] | ["bout", c, n]
//   Config       {"env": [...], "proc": T}
//   Transition   {"src": C, "action": A, "dst": C}
//   Derivation   {"rule", "conclusion", "premises", "cofinite": {"L": [...], "witness": i}?, "side": {...}}
//   Trace        {"symtab": {name: i}, "start": C, "steps": [{"action", "config", "derivation"}]}
// Decoders throw Error(BadInput) on malformed documents.

json to_json(const Permutation &p);
Permutation permutation_from_json(const json &j);

json to_json(const NameSet &s);
NameSet nameset_from_json(const json &j);

json to_json(const Name &n);
Name name_from_json(const json &j);

json to_json(const Term &t);
Term term_from_json(const json &j);

json to_json(const Action &a);
/// Atoms may also be given as identifiers, resolved through `symtab`
/// (x<i> names an atom directly when unbound).
Action action_from_json(const json &j, const SymbolTable *symtab = nullptr);

json to_json(const Config &c);
Config config_from_json(const json &j);

json to_json(const Transition &t);
Transition transition_from_json(const json &j);

json to_json(const Derivation &d);
Derivation derivation_from_json(const json &j);

json to_json(const Trace &t, const SymbolTable &symtab);
Trace trace_from_json(const json &j, SymbolTable *symtab = nullptr);

}  // namespace lnpt

#endif
