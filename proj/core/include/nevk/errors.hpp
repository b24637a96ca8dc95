// Copyright 2026 the nevk authors
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

#ifndef NEVK_ERRORS_HPP
#define NEVK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nevk {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (non-prime p, bad option values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside the domain of a piecewise-linear function, or
// operations on incompatible domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural mismatch (variable counts, component counts).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold
// (general position fails, curve contained in a hypersurface, arity).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exponent-search cap was exceeded before a definite answer was found.
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(const std::string& what, long cap)
      : Error(what), cap_(cap) {}
  long cap() const { return cap_; }

 private:
  long cap_;
};

// A postcondition the implementation itself guarantees failed; indicates a
// bug, never a mathematical counterexample.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Scenario / polynomial text errors, with a position when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int column = -1,
                      std::string fieldPath = {})
      : Error(what), column_(column), fieldPath_(std::move(fieldPath)) {}
  int column() const { return column_; }
  const std::string& fieldPath() const { return fieldPath_; }

 private:
  int column_;
  std::string fieldPath_;
};

}  // namespace nevk

#endif  // NEVK_ERRORS_HPP
