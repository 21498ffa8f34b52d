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

#ifndef CJWE_ENUMERATOR_HPP
#define CJWE_ENUMERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cjwe/alphabet.hpp"
#include "cjwe/code.hpp"
#include "cjwe/cyclotomic.hpp"

namespace cjwe {

/// Flattened index of a in R^g, base |R| with a_1 most significant, so that
/// for g = 2 the pair (i, j) maps to i*|R| + j.
std::uint32_t flatten_index(std::span<const Symbol> a, std::uint32_t q);
std::vector<Symbol> unflatten_index(std::uint32_t flat, std::uint32_t q, std::uint32_t g);

/// A g-fold composition: counts indexed by R^g, stored sparsely as
/// (flattened index, count > 0) pairs in ascending index order.
class CompositionTensor {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  CompositionTensor() = default;
  CompositionTensor(std::uint32_t q, std::uint32_t g);
  /// From a dense vector of length q^g.
  static CompositionTensor from_dense(std::uint32_t q, std::uint32_t g, std::span<const std::uint32_t> dense);
  /// From (index, count) pairs in any order; duplicates are summed.
  static CompositionTensor from_entries(std::uint32_t q, std::uint32_t g, std::vector<Entry> entries);

  std::uint32_t ring_size() const { return q_; }
  std::uint32_t fold() const { return g_; }
  std::uint64_t cells() const;
  const std::vector<Entry>& entries() const { return e_; }

  std::uint32_t at(std::uint32_t flat) const;
  std::uint32_t at(std::span<const Symbol> a) const { return at(flatten_index(a, q_)); }
  std::uint64_t total() const;
  std::vector<std::uint32_t> dense() const;

  /// Variable-wise product of monomials (exponent addition).
  CompositionTensor operator+(const CompositionTensor& o) const;

  friend bool operator==(const CompositionTensor& a, const CompositionTensor& b) {
    return a.q_ == b.q_ && a.g_ == b.g_ && a.e_ == b.e_;
  }
  /// Lexicographic comparison of the dense exponent vectors.
  friend int compare_dense(const CompositionTensor& a, const CompositionTensor& b);

  std::size_t hash() const;

 private:
  std::uint32_t q_ = 0;
  std::uint32_t g_ = 0;
  std::vector<Entry> e_;
};

struct CompositionHash {
  std::size_t operator()(const CompositionTensor& t) const { return t.hash(); }
};

/// Orders monomials descending-lexicographically by dense exponent vector.
struct DescendingLex {
  bool operator()(const CompositionTensor& a, const CompositionTensor& b) const {
    return compare_dense(a, b) > 0;
  }
};

CompositionTensor composition(std::span<const Symbol> u, std::uint32_t q);
CompositionTensor bicomposition(std::span<const Symbol> u, std::span<const Symbol> v, std::uint32_t q);
CompositionTensor gcomposition(std::span<const std::span<const Symbol>> words, std::uint32_t q);

/// Sums out axis j (1-based), giving a (g-1)-fold composition.
CompositionTensor marginalize(const CompositionTensor& t, std::uint32_t axis);
/// The composition s_j of the words on axis j (1-based).
CompositionTensor axis_composition(const CompositionTensor& t, std::uint32_t axis);

/// Sparse exact polynomial in the variables x_a, a in R^g, homogeneous of
/// degree n. Zero coefficients are never stored; iteration is in descending
/// lexicographic order of the exponent vectors.
class Enumerator {
 public:
  using Terms = std::map<CompositionTensor, CycQ, DescendingLex>;

  Enumerator(RingSpec ring, std::uint32_t g, std::uint32_t n);

  const RingSpec& ring() const { return ring_; }
  std::uint32_t fold() const { return g_; }
  std::uint32_t length() const { return n_; }
  std::uint32_t variables() const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial; drops the term if the sum vanishes.
  void add_term(const CompositionTensor& monomial, const CycQ& c);
  CycQ coefficient(const CompositionTensor& monomial) const;

  /// Value with every variable set to 1.
  CycQ mass() const;

  /// Canonical JSON text (see README for the schema).
  std::string to_json() const;
  static Enumerator from_json(std::string_view text);

  friend bool operator==(const Enumerator& a, const Enumerator& b);

 private:
  void check_key(const CompositionTensor& t) const;
  RingSpec ring_;
  std::uint32_t g_;
  std::uint32_t n_;
  Terms terms_;
};

Enumerator cwe(const Code& c);
Enumerator cjwe(const Code& c, const Code& d);
Enumerator gfold_cjwe(std::span<const Code> codes);

/// Builds an enumerator from integer counts keyed by composition.
Enumerator from_counts(const RingSpec& ring, std::uint32_t g, std::uint32_t n,
                       const std::vector<std::pair<CompositionTensor, std::uint64_t>>& counts);

Enumerator add(const Enumerator& p, const Enumerator& q);
Enumerator scale(const Enumerator& p, const CycQ& c);

/// Square matrix over CycQ, row-major.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static CycMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  CycQ& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const CycQ& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix conj_transpose() const;
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

 private:
  std::size_t dim_ = 0;
  std::vector<CycQ> a_;
};

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

/// P with every variable y_K replaced by sum_L M[K, L] x_L (M is |R|^g square).
Enumerator substitute_linear(const Enumerator& p, const CycMatrix& m);
/// Same with M = I (x) .. (x) A (x) .. (x) I, A acting on axis j (1-based),
/// without materializing the Kronecker product.
Enumerator substitute_axis(const Enumerator& p, std::uint32_t axis, const CycMatrix& a);

/// Sets x_a <- x_[a;j], merging axis j (1-based) away.
Enumerator merge_axis(const Enumerator& p, std::uint32_t axis);
/// Reorders variable axes: new axis i carries old axis perm[i] (0-based).
Enumerator permute_axes(const Enumerator& p, std::span<const std::uint32_t> perm);

}  // namespace cjwe

#endif  // CJWE_ENUMERATOR_HPP
