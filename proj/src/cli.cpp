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

#include "lnpt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lnpt/error.hpp"
#include "lnpt/serialize.hpp"
#include "lnpt/suites.hpp"
#include "lnpt/syntax.hpp"

namespace lnpt {

namespace {

struct Settings {
  std::vector<std::string> env;
  unsigned fuel = 8;
  unsigned witnesses = 2;
  bool json = false;
  std::string deriv_file;
  std::uint64_t seed = 42;
};

// "@path" and JSON arguments that are not inline documents name files.
std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string process_text(const std::string &arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

json json_arg(const std::string &arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  const std::string text =
      first != std::string::npos && (arg[first] == '[' || arg[first] == '{') ? arg : read_file(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

// Environment names are bound before the process so they keep the lowest atoms.
Parsed load_process(const std::string &arg, const Settings &s) {
  const std::string text = process_text(arg);
  SymbolTable symtab;
  for (const auto &n : s.env) symtab.intern(n);
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return Parsed{term_from_json(json::parse(text)), symtab};
    } catch (const json::parse_error &e) {
      throw Error(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
    }
  }
  return parse(text, symtab);
}

Config start_config(const Parsed &p, const Settings &s) {
  std::vector<Atom> env;
  for (const auto &n : s.env) env.push_back(*p.symtab.lookup(n));
  return Config{NameSet::finite(env), p.term};
}

std::string render_set(const NameSet &s, const SymbolTable &symtab) {
  std::string out = "{";
  bool first = true;
  for (Atom a : s.elements()) {
    if (!first) out += ", ";
    first = false;
    out += symtab.render(a);
  }
  return out + "}";
}

std::string render_action(const Action &a, const SymbolTable &symtab) {
  const std::string c = a.kind == ActionKind::Tau ? "" : symtab.render(a.chan);
  const std::string n = a.kind == ActionKind::Tau ? "" : symtab.render(a.name);
  switch (a.kind) {
    case ActionKind::Tau: return "tau";
    case ActionKind::In: return c + "?" + n;
    case ActionKind::Out: return c + "!" + n;
    case ActionKind::BoundOut: return "(" + n + ") " + c + "!" + n;
  }
  return "";
}

std::string render_config(const Config &c, const SymbolTable &symtab) {
  return "<" + render_set(c.env, symtab) + "; " + print(c.proc, symtab) + ">";
}

std::string render_step(const Derivation &d, const SymbolTable &symtab) {
  return std::string("[") + to_string(d.rule) + "] " + render_action(d.conclusion.action, symtab) + " -> " +
         render_config(d.conclusion.dst, symtab);
}

json symtab_json(const SymbolTable &symtab) {
  json names = json::object();
  for (const auto &[name, a] : symtab.names()) names[name] = a.index;
  return names;
}

void print_trace(const Trace &t, const SymbolTable &symtab, const Settings &s, std::ostream &out) {
  if (s.json) {
    out << to_json(t, symtab).dump(2) << "\n";
    return;
  }
  out << render_config(t.start, symtab) << "\n";
  for (const auto &step : t.steps) out << render_step(step.derivation, symtab) << "\n";
}

// Names in an actions document that the session does not know yet become
// atoms fresh for everything seen so far.
void intern_action_names(const json &actions, SymbolTable &symtab, const NameSet &avoid) {
  for (const auto &a : actions) {
    if (!a.is_array()) continue;
    for (std::size_t k = 1; k < a.size(); ++k) {
      if (!a[k].is_string()) continue;
      const std::string n = a[k].get<std::string>();
      if (!symtab.lookup(n)) symtab.intern(n, avoid);
    }
  }
}

Atom resolve_name(const std::string &n, SymbolTable &symtab, const NameSet &avoid) {
  if (auto a = symtab.lookup(n)) return *a;
  return symtab.intern(n, avoid);
}

// Cycle notation: "(a b)(c d e)".
Permutation parse_permutation(const std::string &text, SymbolTable &symtab, const NameSet &avoid) {
  std::vector<std::vector<Atom>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::SyntaxError, "permutation: expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<Atom> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw Error(ErrorKind::SyntaxError, "permutation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                   text[pos] == '\''))
        ++pos;
      if (pos == start) throw Error(ErrorKind::SyntaxError, "permutation: expected name at offset " + std::to_string(pos));
      cycle.push_back(resolve_name(text.substr(start, pos - start), symtab, avoid));
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(cycles);
}

std::vector<Derivation> derivations_json(const json &j) {
  std::vector<Derivation> out;
  const json &list = j.is_object() && j.contains("derivations") ? j.at("derivations") : j;
  if (list.is_array())
    for (const auto &d : list) out.push_back(derivation_from_json(d));
  else
    out.push_back(derivation_from_json(list));
  return out;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnboundedSumSyntax: return kExitSyntax;
    case ErrorKind::IllFormedConfig: return kExitIllFormed;
    case ErrorKind::NoSuchTransition: return kExitNoSuchTransition;
    case ErrorKind::NotFreshAtStart: return kExitNotFresh;
    case ErrorKind::CheckFailed:
    case ErrorKind::ExtrusionClash:
    case ErrorKind::InternalWitnessClash: return kExitFailure;
    default: return kExitBadInput;
  }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"lnpt: locally nameless pi-calculus toolkit", "lnpt"};
  app.require_subcommand(1);
  Settings s;
  std::string a1, a2, a3;
  std::size_t cases = 1000;
  std::vector<std::string> optional_seed;

  auto env_opt = [&](CLI::App *c) { c->add_option("-e,--env", s.env, "Known names (comma separated, repeatable)")->delimiter(',')->allow_extra_args(false); };
  auto fuel_opt = [&](CLI::App *c) { c->add_option("--fuel", s.fuel, "Replication unfoldings per step")->capture_default_str(); };
  auto wit_opt = [&](CLI::App *c) { c->add_option("--witnesses", s.witnesses, "Extra cofinite witnesses to check")->capture_default_str(); };
  auto json_opt = [&](CLI::App *c) { c->add_flag("--json", s.json, "JSON output"); };

  auto *fmt = app.add_subcommand("fmt", "Parse and pretty-print a process");
  fmt->add_option("process", a1)->required();
  auto *supp_cmd = app.add_subcommand("supp", "Free names of a process");
  supp_cmd->add_option("process", a1)->required();
  auto *lc_cmd = app.add_subcommand("lc", "Local closure of a process");
  lc_cmd->add_option("process", a1)->required();

  auto *step_cmd = app.add_subcommand("step", "Enumerate transitions of <env; process>");
  step_cmd->add_option("process", a1)->required();
  env_opt(step_cmd);
  fuel_opt(step_cmd);
  json_opt(step_cmd);
  step_cmd->add_option("--deriv", s.deriv_file, "Write derivations to FILE");

  auto *trace_cmd = app.add_subcommand("trace", "Replay a list of actions");
  trace_cmd->add_option("process", a1)->required();
  trace_cmd->add_option("actions", a2, "JSON file or inline array")->required();
  env_opt(trace_cmd);
  fuel_opt(trace_cmd);
  wit_opt(trace_cmd);
  json_opt(trace_cmd);

  auto *rename_cmd = app.add_subcommand("rename", "Swap two start-fresh names throughout a trace");
  rename_cmd->add_option("trace", a1, "Trace JSON file")->required();
  rename_cmd->add_option("n", a2)->required();
  rename_cmd->add_option("m", a3)->required();
  wit_opt(rename_cmd);
  json_opt(rename_cmd);

  auto *perm_cmd = app.add_subcommand("perm", "Apply a permutation, in cycle notation, to a process");
  perm_cmd->add_option("process", a1)->required();
  perm_cmd->add_option("permutation", a2)->required();

  auto *check_cmd = app.add_subcommand("check-deriv", "Check derivations from a JSON file");
  check_cmd->add_option("file", a1)->required();
  wit_opt(check_cmd);

  auto *self_cmd = app.add_subcommand("selftest", "Run a property suite (or 'all')");
  self_cmd->add_option("suite", a1)->required();
  self_cmd->add_option("cases", cases)->capture_default_str();
  self_cmd->add_option("SEED", optional_seed, "Same as --seed");
  self_cmd->add_option("--seed", s.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (fmt->parsed()) {
      const Parsed p = load_process(a1, s);
      out << print(p.term, p.symtab) << "\n";
    } else if (supp_cmd->parsed()) {
      const Parsed p = load_process(a1, s);
      out << render_set(supp(p.term), p.symtab) << "\n";
    } else if (lc_cmd->parsed()) {
      const Parsed p = load_process(a1, s);
      out << (lc(p.term) ? "true" : "false") << "\n";
    } else if (step_cmd->parsed()) {
      const Parsed p = load_process(a1, s);
      const StepResult r = step(start_config(p, s), s.fuel);
      if (s.json) {
        json ts = json::array();
        for (const auto &d : r.derivations)
          ts.push_back({{"rule", to_string(d.rule)}, {"transition", to_json(d.conclusion)}});
        out << json{{"symtab", symtab_json(p.symtab)}, {"complete", r.complete}, {"transitions", ts}}.dump(2) << "\n";
      } else {
        for (const auto &d : r.derivations) out << render_step(d, p.symtab) << "\n";
      }
      if (!r.complete) err << "note: replication fuel exhausted; the list may be partial\n";
      if (!s.deriv_file.empty()) {
        json ds = json::array();
        for (const auto &d : r.derivations) ds.push_back(to_json(d));
        std::ofstream f(s.deriv_file);
        if (!f) throw Error(ErrorKind::BadInput, "cannot write '" + s.deriv_file + "'");
        f << json{{"symtab", symtab_json(p.symtab)}, {"derivations", ds}}.dump(2) << "\n";
      }
    } else if (trace_cmd->parsed()) {
      Parsed p = load_process(a1, s);
      const Config start = start_config(p, s);
      const json actions = json_arg(a2);
      if (!actions.is_array()) throw Error(ErrorKind::BadInput, "actions must be a JSON array");
      intern_action_names(actions, p.symtab, supp(start));
      std::vector<Action> as;
      for (const auto &a : actions) as.push_back(action_from_json(a, &p.symtab));
      print_trace(replay(start, as, s.fuel, s.witnesses), p.symtab, s, out);
    } else if (rename_cmd->parsed()) {
      SymbolTable symtab;
      const Trace t = trace_from_json(json_arg(a1), &symtab);
      NameSet seen = supp(t.start);
      for (const auto &st : t.steps) seen = unite(seen, supp(st.config));
      const Atom n = resolve_name(a2, symtab, seen);
      const Atom m = resolve_name(a3, symtab, seen);
      print_trace(rename_trace(t, n, m, s.witnesses), symtab, s, out);
    } else if (perm_cmd->parsed()) {
      Parsed p = load_process(a1, s);
      const Permutation perm = parse_permutation(a2, p.symtab, supp(p.term));
      out << print(apply(perm, p.term), p.symtab) << "\n";
    } else if (check_cmd->parsed()) {
      const auto ds = derivations_json(json_arg(a1));
      int code = kExitOk;
      for (std::size_t k = 0; k < ds.size(); ++k) {
        if (auto e = check(ds[k], s.witnesses)) {
          out << "derivation " << k << ": " << e->message() << "\n";
          code = kExitFailure;
        } else {
          out << "derivation " << k << ": ok\n";
        }
      }
      return code;
    } else if (self_cmd->parsed()) {
      if (!optional_seed.empty()) s.seed = std::stoull(optional_seed.front());
      std::vector<std::string> suites;
      if (a1 == "all")
        suites = suite_names();
      else
        suites.push_back(a1);
      bool ok = true;
      for (const auto &name : suites) {
        const SuiteReport r = run_suite(name, cases, s.seed);
        for (const auto &prop : r.properties) {
          out << (prop.failed ? "FAIL " : "ok   ") << name << " / " << prop.name << ": passed " << prop.passed
              << ", skipped " << prop.skipped << ", failed " << prop.failed << "\n";
          if (prop.failed) out << "     first failure: " << prop.first_failure << "\n";
        }
        out << name << ": " << r.properties.size() << " properties, " << r.failures() << " failures\n";
        ok = ok && r.ok();
      }
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace lnpt
