// Copyright 2026 The cjwe Authors.
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

#ifndef CJWE_ERROR_HPP
#define CJWE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cjwe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (code files, ring literals, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size budget (codewords, permutations, search space) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold: non-prime-power order,
/// reducible polynomial, inverse of a non-unit, wrong length congruence, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A cyclotomic value that was expected to be rational is not.
class NotRational : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace cjwe

#endif  // CJWE_ERROR_HPP
