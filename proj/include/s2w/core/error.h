// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef S2W_CORE_ERROR_H_
#define S2W_CORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace s2w {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (tag lines, grammar rules, model files). Line and
// column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line = 0,
             std::size_t column = 0, const std::string &source = "")
      : Error(Format(what, line, column, source)),
        message_(what),
        line_(line),
        column_(column),
        source_(source) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // File or stream name, when known.
  const std::string &source() const { return source_; }
  // The message without location.
  const std::string &message() const { return message_; }

 private:
  static std::string Format(const std::string &what, std::size_t line,
                            std::size_t column, const std::string &source) {
    std::string where = source.empty() ? "" : source + ": ";
    if (line != 0) where += "line " + std::to_string(line);
    if (column != 0) {
      where += (line != 0 ? ", column " : "column ") + std::to_string(column);
    }
    if (line != 0 || column != 0) where += ": ";
    return where + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string source_;
};

// A tag sequence that violates the TagSet invariants.
class WellFormednessError : public Error {
 public:
  WellFormednessError(const std::string &what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Caller broke a documented precondition (length mismatch, bad config).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace s2w

#endif  // S2W_CORE_ERROR_H_
