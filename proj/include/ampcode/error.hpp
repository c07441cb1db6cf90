// Copyright 2026 The ampcode Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ampcode {

// Every error raised by the library derives from Error so callers (and the C
// API) can catch the family in one place and map the subclass to a status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Codeword weights do not sum to one.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Shape violations: duplicate rows, mismatched mode counts, empty codes.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A constructor was asked for something it cannot build.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The error-correction conditions do not hold where they are required.
class CriteriaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ampcode
