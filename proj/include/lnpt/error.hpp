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

#ifndef LNPT_ERROR_HPP
#define LNPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lnpt {

enum class ErrorKind {
  AllNamesAvoided,
  Exhausted,
  SyntaxError,
  UnboundedSumSyntax,
  IllFormedConfig,
  ExtrusionClash,
  InternalWitnessClash,
  NotFreshAtStart,
  NoSuchTransition,
  CheckFailed,
  BadInput,
};

const char *to_string(ErrorKind kind);

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lnpt

#endif
