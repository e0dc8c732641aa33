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

#ifndef LNPT_SUITES_HPP
#define LNPT_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lnpt {

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  /// Cases whose precondition did not hold.
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool ok() const;
  std::size_t failures() const;
};

/// fig2-laws, fig3-axioms, sect3-lemmas, lts-lemmas.
const std::vector<std::string> &suite_names();

/// Runs every property of the named suite on `cases` random values. Each case
/// draws from its own stream, so results depend only on (suite, cases, seed).
/// Throws Error(BadInput) for an unknown suite.
SuiteReport run_suite(const std::string &name, std::size_t cases, std::uint64_t seed);

}  // namespace lnpt

#endif
