// Copyright 2026 The lcert Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcert {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. line() is 1-based, or 0 when the error is not tied
// to a particular line (e.g. a disconnected graph).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A structural precondition was violated (bad vertex index, wrong sizes...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The honest prover was asked to certify a property that does not hold.
class PredicateFalse : public Error {
 public:
  using Error::Error;
};

// A configured resource bound was hit: hashing cap, exhausted seed family,
// exhaustive search space too large, arithmetic overflow of a layout.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcert
