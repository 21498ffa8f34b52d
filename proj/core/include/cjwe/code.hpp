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

#ifndef CJWE_CODE_HPP
#define CJWE_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cjwe/alphabet.hpp"
#include "cjwe/rational.hpp"

namespace cjwe {

enum class InnerProduct { Euclidean, Hermitian };

using Word = std::vector<Symbol>;

/// 0-based permutation of coordinates: (u^sigma)_i = u_{sigma[i]}.
using Permutation = std::vector<std::uint32_t>;

/// Flat row-major list of codewords of a common length.
class CodewordList {
 public:
  CodewordList() = default;
  explicit CodewordList(std::size_t n) : n_(n) {}

  std::size_t length() const { return n_; }
  std::size_t size() const { return n_ == 0 ? count_ : data_.size() / n_; }
  std::span<const Symbol> operator[](std::size_t i) const { return {data_.data() + i * n_, n_}; }
  void push_back(std::span<const Symbol> w);
  void reserve(std::size_t words) { data_.reserve(words * n_); }

 private:
  std::size_t n_ = 0;
  std::size_t count_ = 0;  // only meaningful for n == 0
  std::vector<Symbol> data_;
};

/// One cyclic summand of the additive group of a code.
struct CyclicGenerator {
  Word word;
  std::uint32_t order;
};

/// A linear code over R: an F_q-subspace or an additive subgroup of Z_k^n.
///
/// The constructor normalizes the generators once: reduced row echelon form
/// over fields, a diagonal (Smith) form over Z_k. Every codeword then has a
/// unique coordinate vector over a list of cyclic generators, which fixes the
/// enumeration order.
class Code {
 public:
  Code(RingSpec ring, std::size_t n, std::vector<Word> generators,
       InnerProduct inner = InnerProduct::Euclidean);

  static Code zero(RingSpec ring, std::size_t n, InnerProduct inner = InnerProduct::Euclidean);
  static Code full(RingSpec ring, std::size_t n, InnerProduct inner = InnerProduct::Euclidean);

  const RingSpec& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  InnerProduct inner_product() const { return inner_; }
  const std::vector<Word>& generators() const { return generators_; }

  /// Cyclic decomposition of (C, +). Over F_q each echelon row contributes f
  /// summands l^j * row of order p.
  const std::vector<CyclicGenerator>& cyclic_generators() const { return cyclic_; }

  /// |C| exactly, and as a machine integer when it fits.
  BigInt size() const;
  std::uint64_t size_u64() const;  // throws BudgetExceeded if |C| >= 2^64
  /// log_|R| |C| for fields (the dimension); undefined for rings.
  std::size_t dimension() const;

  /// Visits each codeword once in lexicographic order of its coordinates over
  /// cyclic_generators(). Throws BudgetExceeded above limits().max_codewords.
  void for_each_codeword(const std::function<void(std::span<const Symbol>)>& visit) const;
  /// Same, restricted to ranks [begin, end) of that order.
  void for_each_codeword(std::uint64_t begin, std::uint64_t end,
                         const std::function<void(std::span<const Symbol>)>& visit) const;
  CodewordList codewords() const;

  bool contains(std::span<const Symbol> w) const;

  /// u.v under this code's inner product.
  Symbol inner(std::span<const Symbol> u, std::span<const Symbol> v) const;

  /// C^perp under this code's inner product.
  Code dual() const;
  Code permuted(const Permutation& sigma) const;

  /// Same set of codewords (and same ring/length).
  bool same_codewords(const Code& other) const;

  /// Canonical identity: sorted codeword list.
  std::vector<Word> sorted_codewords() const;

 private:
  void normalize_field();
  void normalize_residue();
  void check_budget() const;

  RingSpec ring_;
  std::size_t n_;
  InnerProduct inner_;
  std::vector<Word> generators_;
  std::vector<CyclicGenerator> cyclic_;
  // Field case: reduced echelon basis and its pivot columns.
  std::vector<Word> echelon_;
  std::vector<std::size_t> pivots_;
  // Residue case: diagonal d_i and the column transform V (n x n) with
  // D = U * G * V for some invertible U.
  std::vector<std::uint32_t> diag_;
  std::vector<Word> col_transform_;
};

Word permute(std::span<const Symbol> u, const Permutation& sigma);
Code permute(const Code& c, const Permutation& sigma);
Code dual(const Code& c);

/// |C cap D|; codes must share ring and length.
std::uint64_t intersection_size(const Code& c, const Code& d);

enum class CodeClass { None, SelfOrthogonal, SelfDual, TypeI, TypeII, TypeIII, TypeIV };

std::string to_string(CodeClass c);

bool is_self_orthogonal(const Code& c);
bool is_self_dual(const Code& c);

/// Most specific class that applies. A binary doubly-even self-dual code of
/// length 0 mod 8 reports TypeII even though it also meets the TypeI condition.
CodeClass classify(const Code& c);

/// Whether c belongs to the self-dual family of the given type (for TypeI this
/// includes Type II codes).
bool has_type(const Code& c, CodeClass type);

std::size_t hamming_weight(std::span<const Symbol> w);

}  // namespace cjwe

#endif  // CJWE_CODE_HPP
