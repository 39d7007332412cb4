//
// Copyright 2026 The lpform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LPFORM_ERROR_HPP_
#define LPFORM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lpform {

// Base class for all errors raised by this library. Catching lpform::Error
// is enough to turn any data problem into a clean non-zero exit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

enum class ParseErrorKind {
  kLexical,       // unknown symbol or malformed number literal
  kSyntax,        // unexpected token
  kNonlinear,     // product of variables
  kUnknownAlias,  // identifier outside {x, y, z, w} and the keywords
  kEquality,      // '=' operator; only <= and >= exist
  kSemantic,      // structurally valid but violates a declaration invariant
};

// Error with a 1-based column position (counted in Unicode scalar values).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int column, const std::string& message)
      : Error(message + " (column " + std::to_string(column) + ")"),
        kind_(kind),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int column_;
};

// Raised when a record, corpus, or pipeline input breaks its schema or an
// invariant. `context` typically names the file line or problem id.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
  ValidationError(const std::string& context, const std::string& message)
      : Error(context + ": " + message) {}
};

}  // namespace lpform

#endif  // LPFORM_ERROR_HPP_
