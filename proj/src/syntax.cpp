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

#include "lnpt/syntax.hpp"

#include <cctype>
#include <vector>

#include "lnpt/error.hpp"

namespace lnpt {

namespace {

// x<digits> optionally followed by primes, as produced by SymbolTable::render.
std::optional<Atom> generated_atom(const std::string &name) {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  std::size_t i = 1;
  std::uint64_t value = 0;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
    value = value * 10 + static_cast<std::uint64_t>(name[i] - '0');
    if (value > UINT32_MAX / 2) return std::nullopt;
    ++i;
  }
  if (i == 1) return std::nullopt;
  if (name[1] == '0' && i > 2) return std::nullopt;
  while (i < name.size() && name[i] == '\'') ++i;
  if (i != name.size()) return std::nullopt;
  return Atom{static_cast<std::uint32_t>(value)};
}

}  // namespace

std::optional<Atom> SymbolTable::lookup(const std::string &name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> SymbolTable::name_of(Atom a) const {
  auto it = by_atom_.find(a);
  if (it == by_atom_.end()) return std::nullopt;
  return it->second;
}

Atom SymbolTable::intern(const std::string &name, const NameSet &avoid) {
  if (auto a = lookup(name)) return *a;
  Atom a;
  if (auto g = generated_atom(name); g && !by_atom_.count(*g))
    a = *g;
  else
    a = fresh(unite(atoms(), avoid));
  bind(name, a);
  return a;
}

void SymbolTable::bind(const std::string &name, Atom a) {
  if (by_name_.count(name) || by_atom_.count(a))
    throw Error(ErrorKind::BadInput, "symbol '" + name + "' or atom " + std::to_string(a.index) + " already bound");
  by_name_.emplace(name, a);
  by_atom_.emplace(a, name);
}

NameSet SymbolTable::atoms() const {
  std::vector<Atom> out;
  for (const auto &kv : by_atom_) out.push_back(kv.first);
  return NameSet::finite(out);
}

std::string SymbolTable::render(Atom a) const {
  if (auto n = name_of(a)) return *n;
  std::string s = "x" + std::to_string(a.index);
  while (by_name_.count(s)) s += '\'';
  return s;
}

namespace {

// Binder atoms live far above anything the symbol table hands out and are
// closed away before parsing returns.
constexpr std::uint32_t kBinderBase = 0xF0000000u;

class Parser {
 public:
  Parser(std::string_view text, SymbolTable symtab) : text_(text), symtab_(std::move(symtab)) {}

  Parsed run() {
    Term t = parse_par();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return {std::move(t), std::move(symtab_)};
  }

 private:
  [[noreturn]] void fail(const std::string &expected, ErrorKind kind = ErrorKind::SyntaxError) {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(kind, "at offset " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::optional<std::string> peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id || *id == "new" || *id == "sum") fail("identifier");
    pos_ += id->size();
    return *id;
  }

  Atom resolve(const std::string &id) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == id) return it->second;
    return symtab_.intern(id);
  }

  Name name(const std::string &id) { return Name::free(resolve(id)); }

  // Parses `body` with `id` bound, then turns the binder atom into index 0.
  template <class F>
  Term bound_body(const std::string &id, F &&body) {
    Atom binder{kBinderBase + next_binder_++};
    scope_.emplace_back(id, binder);
    Term t = body();
    scope_.pop_back();
    return close_at(Level{0}, binder, t);
  }

  Term parse_par() {
    Term t = parse_prefix();
    while (accept('|')) t = Term::par(std::move(t), parse_prefix());
    return t;
  }

  Term parse_prefix() {
    skip_ws();
    if (accept('(')) {
      Term t = parse_par();
      expect(')');
      return t;
    }
    if (accept('*')) return Term::rep(parse_prefix());
    if (peek('0')) {
      ++pos_;
      if (pos_ < text_.size() && ident_char(text_[pos_])) fail("'0' as a complete token");
      return Term::nil();
    }
    auto id = peek_ident();
    if (!id) fail("process");
    if (*id == "new") {
      pos_ += 3;
      std::string binder = ident();
      expect('.');
      return Term::res(bound_body(binder, [&] { return parse_prefix(); }));
    }
    if (*id == "sum") {
      pos_ += 3;
      return parse_sum();
    }
    std::string chan = ident();
    if (accept('?')) {
      Name c = name(chan);
      expect('(');
      std::string binder = ident();
      expect(')');
      expect('.');
      return Term::inp(c, bound_body(binder, [&] { return parse_prefix(); }));
    }
    if (accept('!')) {
      Name c = name(chan);
      Name m = name(ident());
      expect('.');
      return Term::out(c, m, parse_prefix());
    }
    fail("'?' or '!'");
  }

  Term parse_sum() {
    expect('[');
    std::vector<Term> entries;
    if (!peek(';')) {
      if (peek(']')) fail("sum entries and a default after ';'", ErrorKind::UnboundedSumSyntax);
      entries.push_back(parse_par());
      while (accept(',')) entries.push_back(parse_par());
    }
    if (!accept(';')) fail("';' and a default branch", ErrorKind::UnboundedSumSyntax);
    Term fallback = parse_par();
    expect(']');
    return Term::sum(IndexedFamily<Term>(std::move(entries), std::move(fallback)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SymbolTable symtab_;
  std::vector<std::pair<std::string, Atom>> scope_;
  std::uint32_t next_binder_ = 0;
};

class Printer {
 public:
  Printer(const SymbolTable &symtab, NameSet avoid) : symtab_(symtab), avoid_(std::move(avoid)) {}

  std::string par(const Term &t) {
    if (t.kind() != TermKind::Par) return prefix(t);
    std::string right = t.right().kind() == TermKind::Par ? "(" + par(t.right()) + ")" : prefix(t.right());
    return par(t.left()) + " | " + right;
  }

  std::string prefix(const Term &t) {
    switch (t.kind()) {
      case TermKind::Nil:
        return "0";
      case TermKind::Par:
        return "(" + par(t) + ")";
      case TermKind::Rep:
        return "*" + prefix(t.body());
      case TermKind::Out:
        return name(t.chan()) + "!" + name(t.msg()) + ". " + prefix(t.body());
      case TermKind::Inp: {
        std::string c = name(t.chan());
        return with_binder(t.body(), [&](const std::string &x, const Term &body) {
          return c + "?(" + x + "). " + prefix(body);
        });
      }
      case TermKind::Res:
        return with_binder(t.body(), [&](const std::string &x, const Term &body) {
          return "new " + x + ". " + prefix(body);
        });
      case TermKind::Sum: {
        const auto &fam = t.family();
        std::string s = "sum[";
        if (fam.entries().empty()) {
          s += par(fam.fallback());
        } else {
          for (std::size_t i = 0; i < fam.entries().size(); ++i) s += (i ? ", " : "") + par(fam.entries()[i]);
        }
        return s + "; " + par(fam.fallback()) + "]";
      }
    }
    return "?";
  }

 private:
  std::string name(const Name &n) {
    if (n.is_free()) return symtab_.render(n.atom());
    return "#" + std::to_string(n.level().depth);  // dangling index
  }

  template <class F>
  std::string with_binder(const Term &body, F &&render) {
    Atom x = fresh(avoid_);
    NameSet saved = avoid_;
    avoid_ = with(avoid_, x);
    std::string s = render(symtab_.render(x), open_at(Level{0}, x, body));
    avoid_ = std::move(saved);
    return s;
  }

  const SymbolTable &symtab_;
  NameSet avoid_;
};

}  // namespace

Parsed parse(std::string_view text, SymbolTable symtab) { return Parser(text, std::move(symtab)).run(); }

std::string print(const Term &t, const SymbolTable &symtab) {
  return Printer(symtab, unite(symtab.atoms(), supp(t))).par(t);
}

}  // namespace lnpt
