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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lnpt/cli.hpp"
#include "lnpt/serialize.hpp"

using namespace lnpt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) { return std::string(P_tmpdir) + "/lnpt_cli_test_" + name; }

}  // namespace

TEST_CASE("fmt, supp and lc") {
  CHECK(run({"fmt", "new c. n!c.0"}).out == "new x1. n!x1. 0\n");
  CHECK(run({"supp", "n!m.0"}).out == "{n, m}\n");
  CHECK(run({"lc", "new c. n!c. 0"}).out == "true\n");
  CHECK(run({"lc", R"({"t":"out","chan":{"free":0},"msg":{"bound":0},"cont":{"t":"nil"}})"}).out == "false\n");
}

TEST_CASE("step") {
  const Run r = run({"step", "-e", "n", "new c. n!c. 0"});
  CHECK(r.code == 0);
  CHECK(r.out == "[Open] (x1) n!x1 -> <{n, x1}; 0>\n");
  CHECK(run({"step", "-e", "c", "0"}).out.empty());
  // -e takes one value per occurrence, so it never swallows the process.
  CHECK(run({"step", "-e", "n", "new c. n!c. 0", "--json"}).code == 0);
  CHECK(run({"step", "-e", "a,b", "-e", "c", "a!c.0"}).out == "[Out] a!c -> <{a, b, c}; 0>\n");
  const Run rep = run({"step", "-e", "c", "--fuel", "1", "*( new n. c?(x). x!n. 0 )"});
  CHECK(rep.out.find("c?c ->") != std::string::npos);
  CHECK(rep.out.find("c?x1 ->") != std::string::npos);
}

TEST_CASE("step output is deterministic") {
  const std::vector<std::string> args{"step", "-e", "a,b", "--json", "a?(x). x!b. 0 | new n. a!n. n?(y). 0"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"fmt", "new . 0"}).code == kExitSyntax);
  CHECK(run({"fmt", "sum[]"}).code == kExitSyntax);
  CHECK(run({"step", R"({"t":"out","chan":{"free":0},"msg":{"bound":0},"cont":{"t":"nil"}})"}).code ==
        kExitIllFormed);
  CHECK(run({"trace", "-e", "c", "c!c.0", R"([["in","c","c"]])"}).code == kExitNoSuchTransition);
  CHECK(run({"selftest", "no-such-suite", "1"}).code == kExitBadInput);
}

TEST_CASE("trace and rename") {
  const std::string actions = R"([["in","c","y1"],["bout","y1","n1"]])";
  const Run r = run({"trace", "-e", "c", "--fuel", "2", "*(new n. c?(x). x!n. 0)", actions});
  REQUIRE(r.code == 0);
  // Binders print at the least names unused by the session.
  CHECK(r.out ==
        "<{c}; *new x3. c?(x4). x4!x3. 0>\n"
        "[Rep] c?y1 -> <{c, y1}; *new x3. c?(x4). x4!x3. 0 | new x3. y1!x3. 0>\n"
        "[Par-R] (n1) y1!n1 -> <{c, y1, n1}; *new x3. c?(x4). x4!x3. 0 | 0>\n");
  CHECK(run({"trace", "-e", "c", "0", "[]"}).out == "<{c}; 0>\n");

  const Run j = run({"trace", "-e", "c", "--json", "*(new n. c?(x). x!n. 0)", actions});
  REQUIRE(j.code == 0);
  const std::string path = temp_path("trace.json");
  std::ofstream(path) << j.out;
  const Run ren = run({"rename", path, "n1", "m"});
  CHECK(ren.code == 0);
  CHECK(ren.out.find("(m) y1!m") != std::string::npos);
  CHECK(run({"rename", path, "c", "m"}).code == kExitNotFresh);
  std::remove(path.c_str());
}

TEST_CASE("perm") {
  CHECK(run({"perm", "a!b. 0", "(a b)"}).out == "b!a. 0\n");
  CHECK(run({"perm", "a!b. c!a. 0", "(a b c)"}).out == "b!c. a!b. 0\n");
  CHECK(run({"perm", "a!b. 0", "(a"}).code == kExitSyntax);
}

TEST_CASE("check-deriv") {
  const std::string path = temp_path("deriv.json");
  REQUIRE(run({"step", "-e", "n", "--deriv", path, "new c. n!c. 0"}).code == 0);
  CHECK(run({"check-deriv", path}).out == "derivation 0: ok\n");

  // Put the extruded name into the observer's environment.
  json doc;
  std::ifstream(path) >> doc;
  json &d = doc["derivations"][0];
  d["conclusion"]["src"]["env"].push_back(1);
  d["conclusion"]["dst"]["env"] = json::array({0, 1});
  std::ofstream(path) << doc.dump();
  const Run bad = run({"check-deriv", path});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.out.find("FreshnessViolated") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("selftest") {
  const Run r = run({"selftest", "fig3-axioms", "50", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fig3-axioms: ") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
