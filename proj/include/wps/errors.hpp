// Copyright 2026 The wpscount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WPS_ERRORS_HPP
#define WPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wps {

/// Raised when an input is mathematically degenerate for the requested
/// operation (division by zero, singular model, non-minimal series, ...).
/// Precondition violations on shapes and degrees use std::invalid_argument.
class MathError : public std::domain_error {
 public:
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

class NonMinimalError : public MathError {
 public:
  explicit NonMinimalError(const std::string& what) : MathError(what) {}
};

class SingularModelError : public MathError {
 public:
  explicit SingularModelError(const std::string& what) : MathError(what) {}
};

/// Malformed input; `where` locates the offending field.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::invalid_argument(where + ": " + what) {}
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wps

#endif  // WPS_ERRORS_HPP
