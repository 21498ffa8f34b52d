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

#ifndef CJWE_CYCLOTOMIC_HPP
#define CJWE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjwe/rational.hpp"

namespace cjwe {

/// Coefficients of the m-th cyclotomic polynomial, low degree first (monic).
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t m);

/// Exact element of Q(zeta_m), stored in the power basis 1, zeta, ...,
/// zeta^(phi(m)-1), i.e. as a rational polynomial reduced mod Phi_m.
///
/// Values with different conductors may be mixed freely; binary operations
/// embed both operands into the lcm conductor first. Equality compares the
/// represented field elements, not the storage.
class CycQ {
 public:
  CycQ();  // zero in Q
  CycQ(const Rational& r);  // NOLINT: implicit promotion is convenient in formulas
  CycQ(long v);             // NOLINT

  /// zeta_m^e for any integer e.
  static CycQ zeta_pow(std::uint32_t m, std::int64_t e);

  /// Builds from arbitrary-length coefficients of a polynomial in zeta_m and reduces.
  static CycQ from_poly(std::uint32_t m, std::span<const Rational> coeffs);

  std::uint32_t conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational if any non-constant coordinate is nonzero.
  Rational to_rational() const;

  /// Same element in Q(zeta_M); M must be a multiple of conductor().
  CycQ embed(std::uint32_t M) const;
  /// Same element in Q(zeta_m) if it lies there (m | conductor()).
  std::optional<CycQ> restrict_to(std::uint32_t m) const;
  /// Same element at the smallest conductor whose field contains it. Storage
  /// otherwise depends on how a value was computed; this form does not.
  CycQ canonical() const;

  /// Complex conjugation (zeta -> zeta^-1).
  CycQ conj() const;

  std::complex<double> to_complex() const;

  CycQ& operator+=(const CycQ& o);
  CycQ& operator-=(const CycQ& o);
  CycQ& operator*=(const CycQ& o);
  CycQ& operator*=(const Rational& r);

  friend CycQ operator+(CycQ a, const CycQ& b) { return a += b; }
  friend CycQ operator-(CycQ a, const CycQ& b) { return a -= b; }
  friend CycQ operator*(CycQ a, const CycQ& b) { return a *= b; }
  friend CycQ operator*(CycQ a, const Rational& r) { return a *= r; }
  CycQ operator-() const;

  friend bool operator==(const CycQ& a, const CycQ& b);

  /// "a/b" when rational, otherwise {"m":..,"coeffs":[..]} as JSON text.
  std::string to_string() const;

 private:
  CycQ(std::uint32_t m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  void reduce_from(std::vector<Rational> poly);

  std::uint32_t m_ = 1;
  std::vector<Rational> c_;
};

}  // namespace cjwe

#endif  // CJWE_CYCLOTOMIC_HPP
