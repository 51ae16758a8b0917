// Copyright 2026 The Transor Authors
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

#ifndef TRANSOR_ERRORS_H_
#define TRANSOR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transor {

// Precondition violated by the caller (vertex outside the graph, malformed
// orientation, partition that is not made of modules, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph text. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A brute-force routine was asked to run beyond its hard size limit.
class OracleScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal consistency check failed. Never expected; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace transor

#endif  // TRANSOR_ERRORS_H_
