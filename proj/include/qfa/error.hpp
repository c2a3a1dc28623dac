// Copyright 2026 The qfa Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qfa {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (non-square, wrong dimension, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Unknown, duplicate or malformed state/symbol/outcome label.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// A construction or conversion precondition does not hold.
class TransformError : public Error {
 public:
  using Error::Error;
};

/// Bounded enumeration would exceed the configured string limit.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

/// One numerical invariant that a machine fails to satisfy.
struct Violation {
  std::string component;
  std::string message;
  double residual = 0.0;

  std::string to_string() const;
};

/// Thrown when a machine that must be valid is not; carries every violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Malformed machine document. `line`/`column` are 1-based and 0 when the
/// failure is semantic rather than syntactic; `path` names the field.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string path, std::size_t line = 0,
             std::size_t column = 0);

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qfa
