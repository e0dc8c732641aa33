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

#ifndef LNPT_SYNTAX_HPP
#define LNPT_SYNTAX_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lnpt/term.hpp"

namespace lnpt {

/// Bijection between identifiers and atoms. Atoms without an identifier
/// display as x<i>.
class SymbolTable {
 public:
  std::optional<Atom> lookup(const std::string &name) const;
  std::optional<std::string> name_of(Atom a) const;

  /// Returns the atom bound to `name`, binding it first if needed. A new name
  /// gets the least atom neither named nor in `avoid`, except that an unbound
  /// x<i> identifier claims atom i when that atom has no name yet.
  Atom intern(const std::string &name, const NameSet &avoid = NameSet());
  /// Binds `name` to `a`; throws Error(BadInput) if either side is taken.
  void bind(const std::string &name, Atom a);

  NameSet atoms() const;
  const std::map<std::string, Atom> &names() const { return by_name_; }
  /// Display text: the bound name, or x<i> (primed until it collides with no name).
  std::string render(Atom a) const;

  friend bool operator==(const SymbolTable &, const SymbolTable &) = default;

 private:
  std::map<std::string, Atom> by_name_;
  std::map<Atom, std::string> by_atom_;
};

struct Parsed {
  Term term;
  SymbolTable symtab;
};

/// Grammar (whitespace-insensitive, "|" left-associative and looser than prefixes):
///   P ::= 0 | ID?(ID).P | ID!ID.P | P|P | new ID.P | *P | sum[P, ..., P; P] | (P)
/// Binders become indices by closing their bodies; free identifiers are
/// interned into the returned table in order of first occurrence.
Parsed parse(std::string_view text, SymbolTable symtab = SymbolTable());

/// Renders a term, opening each binder at the least atom fresh for the
/// term, the table, and the enclosing binders.
std::string print(const Term &t, const SymbolTable &symtab = SymbolTable());

}  // namespace lnpt

#endif
