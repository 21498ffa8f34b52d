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

#ifndef CJWE_ALPHABET_HPP
#define CJWE_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cjwe/cyclotomic.hpp"

namespace cjwe {

/// Index of an alphabet element in the canonical order (gamma). Index 0 is zero.
using Symbol = std::uint16_t;

enum class RingKind { FiniteField, IntegerResidue };

/// The alphabet R: a finite field F_q (q = p^f <= 2^16) or Z_k (2 <= k <= 2^16).
///
/// Field elements a_0 + a_1*l + ... + a_{f-1}*l^{f-1} (l a root of the
/// defining polynomial) have index sum a_i p^i; residues of Z_k are their own
/// index. Instances are immutable and cheap to copy.
class RingSpec {
 public:
  /// F_q. Without `poly`, degree > 1 uses the built-in Conway polynomial
  /// (available for q <= 2^10). `poly` is c_0..c_f, low degree first, monic.
  static RingSpec field(std::uint32_t q, std::optional<std::vector<std::uint32_t>> poly = std::nullopt);
  static RingSpec residue(std::uint32_t k);
  static RingSpec make(RingKind kind, std::uint32_t order,
                       std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  /// Parses `F <q> [poly c0,c1,...,cf]` or `Z <k>`.
  static RingSpec parse(std::string_view literal);
  std::string literal() const;

  RingKind kind() const;
  bool is_field() const { return kind() == RingKind::FiniteField; }
  std::uint32_t size() const;
  /// p for fields, k for residue rings.
  std::uint32_t characteristic() const;
  /// f for fields, 1 for residue rings.
  std::uint32_t degree() const;
  const std::vector<std::uint32_t>& defining_poly() const;

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const;
  Symbol mul(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  bool is_unit(Symbol a) const;
  /// Throws PreconditionError for non-units.
  Symbol inv(Symbol a) const;
  /// Conjugation a -> a^(p^(f/2)); defined for fields of even degree only.
  bool has_conj() const;
  Symbol conj(Symbol a) const;
  /// Additive order of a.
  std::uint32_t additive_order(Symbol a) const;
  /// i-th F_p coordinate of a field element (residues: i == 0 gives a).
  std::uint32_t digit(Symbol a, std::uint32_t i) const;

  /// Conductor m of the character values (p or k).
  std::uint32_t chi_conductor() const;
  /// e such that chi(a) = zeta_m^e.
  std::uint32_t chi_exponent(Symbol a) const;
  CycQ chi(Symbol a) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  struct Impl;
  explicit RingSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A ring element bound to its alphabet.
class Element {
 public:
  Element(RingSpec ring, Symbol idx);

  const RingSpec& ring() const { return ring_; }
  Symbol index() const { return idx_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element conj() const;
  CycQ chi() const { return ring_.chi(idx_); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.idx_ == b.idx_ && a.ring_ == b.ring_;
  }

 private:
  void require_same(const Element& o) const;
  RingSpec ring_;
  Symbol idx_;
};

/// gamma(a) and omega(i) from the canonical element order.
inline Symbol gamma(const Element& a) { return a.index(); }
Element omega(const RingSpec& ring, std::uint32_t i);

/// Built-in Conway polynomial for p^f, if tabulated (q <= 2^10, f >= 2).
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t f);

/// Whether the monic polynomial is irreducible / primitive over F_p.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);
bool is_primitive(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace cjwe

#endif  // CJWE_ALPHABET_HPP
