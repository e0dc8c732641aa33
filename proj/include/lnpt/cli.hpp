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

#ifndef LNPT_CLI_HPP
#define LNPT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lnpt {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitSyntax = 1,
  kExitIllFormed = 2,
  kExitNoSuchTransition = 3,
  kExitNotFresh = 4,
  kExitFailure = 5,  // suite failure or rejected derivation
  kExitBadInput = 6,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace lnpt

#endif
