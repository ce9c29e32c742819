// Copyright 2026 The macbound Authors
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

#include <stdexcept>
#include <string>

namespace macbound {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of two arguments do not agree (alphabet sizes, dimensions, message counts).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A value violates a type invariant: a distribution that does not sum to one,
// a non-Hermitian matrix, duplicate codewords, an index out of range.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

// A bound's precondition (dominance of q over q1/q2, operator order of sigma
// over sigma_x, rate constraints) fails. `where` names the worst entry.
class PreconditionViolation : public Error {
 public:
  PreconditionViolation(const std::string& what, std::string where, double amount)
      : Error(what + " (worst at " + where + ", violation " + std::to_string(amount) + ")"),
        where_(std::move(where)),
        amount_(amount) {}

  const std::string& where() const noexcept { return where_; }
  double amount() const noexcept { return amount_; }

 private:
  std::string where_;
  double amount_;
};

// A conditional p(y|x) was requested where the conditioning marginal is zero
// and the result would be used with nonzero weight.
class UndefinedConditional : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input document; the message carries the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid command-line usage: unknown suite, incompatible options.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace macbound
