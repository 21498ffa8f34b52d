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

#ifndef CJWE_RATIONAL_HPP
#define CJWE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cjwe {

using BigInt = mpz_class;

/// Exact rational; mpq_class keeps lowest terms with a positive denominator
/// as long as every value passes through canonicalize() or arithmetic.
using Rational = mpq_class;

/// Serializes as "p/q", always with an explicit denominator ("3/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p/q" or "p". Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

/// a^e for small non-negative exponents.
BigInt ipow(const BigInt& a, unsigned long e);

}  // namespace cjwe

#endif  // CJWE_RATIONAL_HPP
