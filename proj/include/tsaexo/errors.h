// Copyright 2026 The tsaexo Authors
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

#ifndef TSAEXO_ERRORS_H_
#define TSAEXO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tsaexo {

// Every library error carries a short machine-readable category. The CLI
// prints it and maps it onto a process exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}

  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

// Input outside the domain of a formula (singular geometry, negative
// durations, twist beyond string capacity, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class MissingParameterError : public Error {
 public:
  explicit MissingParameterError(const std::string& field)
      : Error("missing_parameter", "missing required parameter: " + field),
        field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error("range", what) {}
};

class NoFeasibleMotorError : public Error {
 public:
  explicit NoFeasibleMotorError(const std::string& what)
      : Error("no_feasible_motor", what) {}
};

class NoActivationError : public Error {
 public:
  NoActivationError()
      : Error("no_activation", "event list contains no ACTIVATE event") {}
};

class UnknownCommandError : public Error {
 public:
  explicit UnknownCommandError(std::string line)
      : Error("unknown_command", "unknown command: '" + line + "'"),
        line_(std::move(line)) {}

  const std::string& line() const { return line_; }

 private:
  std::string line_;
};

// Malformed input file; line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error("parse", line > 0 ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error("validation", what) {}
};

// Bad combination of command-line options.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error("usage", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace tsaexo

#endif  // TSAEXO_ERRORS_H_
