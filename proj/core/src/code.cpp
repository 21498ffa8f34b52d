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

#include "cjwe/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cjwe/error.hpp"
#include "cjwe/parallel.hpp"

namespace cjwe {

void CodewordList::push_back(std::span<const Symbol> w) {
  if (w.size() != n_) throw PreconditionError("codeword length mismatch");
  data_.insert(data_.end(), w.begin(), w.end());
  if (n_ == 0) ++count_;
}

namespace {

// Extended gcd on non-negative integers: g = s*a + t*b.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::uint32_t mod_k(std::int64_t v, std::uint32_t k) {
  std::int64_t r = v % static_cast<std::int64_t>(k);
  return static_cast<std::uint32_t>(r < 0 ? r + k : r);
}

// Unimodular 2x2 combination of (x, y): x' = s x + t y, y' = u x + v y, mod k.
void combine(std::vector<std::uint32_t>& x, std::vector<std::uint32_t>& y, std::int64_t s, std::int64_t t,
             std::int64_t u, std::int64_t v, std::uint32_t k) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t a = x[i], b = y[i];
    x[i] = mod_k(s * a + t * b, k);
    y[i] = mod_k(u * a + v * b, k);
  }
}

// Coefficients (s, t, u, v) with s a + t b = g, u a + v b = 0, s v - t u = 1.
std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> elimination(std::int64_t a, std::int64_t b) {
  if (a != 0 && b % a == 0) return {1, 0, -(b / a), 1};
  auto [g, s, t] = ext_gcd(a, b);
  return {s, t, -(b / g), a / g};
}

}  // namespace

Code::Code(RingSpec ring, std::size_t n, std::vector<Word> generators, InnerProduct inner)
    : ring_(std::move(ring)), n_(n), inner_(inner), generators_(std::move(generators)) {
  if (inner_ == InnerProduct::Hermitian && !ring_.has_conj()) {
    throw PreconditionError("Hermitian inner product needs a field of even degree");
  }
  for (const auto& g : generators_) {
    if (g.size() != n_) throw PreconditionError("generator length differs from n");
    for (auto s : g)
      if (s >= ring_.size()) throw PreconditionError("generator entry out of range");
  }
  if (ring_.is_field())
    normalize_field();
  else
    normalize_residue();
}

Code Code::zero(RingSpec ring, std::size_t n, InnerProduct inner) { return Code(std::move(ring), n, {}, inner); }

Code Code::full(RingSpec ring, std::size_t n, InnerProduct inner) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Word w(n, 0);
    w[i] = 1;
    gens.push_back(std::move(w));
  }
  return Code(std::move(ring), n, std::move(gens), inner);
}

void Code::normalize_field() {
  std::vector<Word> rows = generators_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_ && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Symbol inv = ring_.inv(rows[r][col]);
    for (auto& x : rows[r]) x = ring_.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Symbol f = ring_.neg(rows[i][col]);
      for (std::size_t j = 0; j < n_; ++j) rows[i][j] = ring_.add(rows[i][j], ring_.mul(f, rows[r][j]));
    }
    pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  echelon_ = std::move(rows);

  const std::uint32_t p = ring_.characteristic();
  const std::uint32_t f = ring_.degree();
  for (const auto& row : echelon_) {
    for (std::uint32_t j = f; j-- > 0;) {
      std::uint32_t lambda_pow = 1;
      for (std::uint32_t i = 0; i < j; ++i) lambda_pow *= p;
      Word w(n_);
      for (std::size_t c = 0; c < n_; ++c) w[c] = ring_.mul(static_cast<Symbol>(lambda_pow), row[c]);
      cyclic_.push_back({std::move(w), p});
    }
  }
}

void Code::normalize_residue() {
  const std::uint32_t k = ring_.size();
  const std::size_t m = generators_.size();
  std::vector<std::vector<std::uint32_t>> a(m, std::vector<std::uint32_t>(n_));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n_; ++j) a[i][j] = generators_[i][j];

  // Column transform V and its inverse, stored by columns / rows respectively.
  std::vector<std::vector<std::uint32_t>> vcols(n_, std::vector<std::uint32_t>(n_, 0));
  std::vector<std::vector<std::uint32_t>> vinv_rows(n_, std::vector<std::uint32_t>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) vcols[i][i] = vinv_rows[i][i] = 1;

  auto column = [&](std::size_t j) {
    std::vector<std::uint32_t> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = a[i][j];
    return c;
  };
  auto set_column = [&](std::size_t j, const std::vector<std::uint32_t>& c) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] = c[i];
  };
  // Column op on (t, j): col_t' = s col_t + t' col_j, col_j' = u col_t + v col_j.
  auto col_op = [&](std::size_t t, std::size_t j, std::int64_t s, std::int64_t tt, std::int64_t u, std::int64_t v) {
    auto ct = column(t), cj = column(j);
    combine(ct, cj, s, tt, u, v, k);
    set_column(t, ct);
    set_column(j, cj);
    combine(vcols[t], vcols[j], s, tt, u, v, k);
    // E = [[s, u], [t', v]] on (t, j) has determinant 1, so E^-1 = [[v, -u], [-t', s]].
    combine(vinv_rows[t], vinv_rows[j], v, -u, -tt, s, k);
  };

  const std::size_t limit = std::min(m, n_);
  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Pivot: nonzero entry of the trailing block with the smallest gcd with k.
    std::size_t pi = m, pj = n_;
    std::uint32_t best = k + 1;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (a[i][j] == 0) continue;
        std::uint32_t g = std::gcd(a[i][j], k);
        if (g < best) {
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (auto& row : a) std::swap(row[t], row[pj]);
      std::swap(vcols[t], vcols[pj]);
      std::swap(vinv_rows[t], vinv_rows[pj]);
    }

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        auto [s, tt, u, v] = elimination(a[t][t], a[i][t]);
        combine(a[t], a[i], s, tt, u, v, k);
      }
      bool dirty = false;
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a[t][j] == 0) continue;
        auto [s, tt, u, v] = elimination(a[t][t], a[t][j]);
        col_op(t, j, s, tt, u, v);
      }
      for (std::size_t i = t + 1; i < m; ++i) dirty = dirty || a[i][t] != 0;
      if (!dirty) break;
    }
  }
  diag_.assign(limit, 0);
  for (std::size_t i = 0; i < limit; ++i) diag_[i] = a[i][i];

  col_transform_.assign(n_, Word(n_));
  for (std::size_t c = 0; c < n_; ++c)
    for (std::size_t r = 0; r < n_; ++r) col_transform_[c][r] = static_cast<Symbol>(vcols[c][r]);

  for (std::size_t i = 0; i < limit; ++i) {
    std::uint32_t g = std::gcd(diag_[i], k);
    if (g == k) continue;
    Word w(n_);
    for (std::size_t c = 0; c < n_; ++c) w[c] = static_cast<Symbol>(static_cast<std::uint64_t>(g) * vinv_rows[i][c] % k);
    cyclic_.push_back({std::move(w), k / g});
  }
}

BigInt Code::size() const {
  BigInt s = 1;
  for (const auto& g : cyclic_) s *= g.order;
  return s;
}

std::uint64_t Code::size_u64() const {
  BigInt s = size();
  if (s >= BigInt(1) << 63) throw BudgetExceeded("code too large: " + s.get_str() + " codewords");
  return s.get_ui();
}

std::size_t Code::dimension() const { return echelon_.size(); }

void Code::check_budget() const {
  if (size() > BigInt(std::to_string(limits().max_codewords))) {
    throw BudgetExceeded("code has " + size().get_str() + " codewords, budget is " +
                         std::to_string(limits().max_codewords));
  }
}

void Code::for_each_codeword(const std::function<void(std::span<const Symbol>)>& visit) const {
  check_budget();
  for_each_codeword(0, size_u64(), visit);
}

void Code::for_each_codeword(std::uint64_t begin, std::uint64_t end,
                             const std::function<void(std::span<const Symbol>)>& visit) const {
  check_budget();
  end = std::min(end, size_u64());
  if (begin >= end) return;
  const std::size_t t = cyclic_.size();
  std::vector<std::uint32_t> digit(t, 0);
  std::uint64_t rest = begin;
  for (std::size_t i = t; i-- > 0;) {
    digit[i] = static_cast<std::uint32_t>(rest % cyclic_[i].order);
    rest /= cyclic_[i].order;
  }
  Word w(n_, 0);
  for (std::size_t i = 0; i < t; ++i) {
    if (digit[i] == 0) continue;
    for (std::size_t c = 0; c < n_; ++c) {
      w[c] = ring_.add(w[c], ring_.mul(static_cast<Symbol>(digit[i]), cyclic_[i].word[c]));
    }
  }
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    visit(w);
    for (std::size_t i = t; i-- > 0;) {
      const Word& g = cyclic_[i].word;
      for (std::size_t c = 0; c < n_; ++c) w[c] = ring_.add(w[c], g[c]);
      if (++digit[i] < cyclic_[i].order) break;
      digit[i] = 0;
    }
  }
}

CodewordList Code::codewords() const {
  CodewordList out(n_);
  out.reserve(static_cast<std::size_t>(size_u64()));
  for_each_codeword([&](std::span<const Symbol> w) { out.push_back(w); });
  return out;
}

bool Code::contains(std::span<const Symbol> w) const {
  if (w.size() != n_) throw PreconditionError("word length differs from code length");
  if (ring_.is_field()) {
    Word r(w.begin(), w.end());
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
      Symbol f = r[pivots_[i]];
      if (f == 0) continue;
      Symbol nf = ring_.neg(f);
      for (std::size_t c = 0; c < n_; ++c) r[c] = ring_.add(r[c], ring_.mul(nf, echelon_[i][c]));
    }
    return std::all_of(r.begin(), r.end(), [](Symbol s) { return s == 0; });
  }
  // w in C iff (w V)_i lies in the ideal (d_i) for every column of the diagonal form.
  const std::uint32_t k = ring_.size();
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < n_; ++r) acc += static_cast<std::uint64_t>(w[r]) * col_transform_[i][r];
    std::uint32_t y = static_cast<std::uint32_t>(acc % k);
    std::uint32_t g = i < diag_.size() ? std::gcd(diag_[i], k) : k;
    if (y % g != 0) return false;
  }
  return true;
}

Symbol Code::inner(std::span<const Symbol> u, std::span<const Symbol> v) const {
  if (u.size() != n_ || v.size() != n_) throw PreconditionError("inner product length mismatch");
  Symbol acc = 0;
  const bool herm = inner_ == InnerProduct::Hermitian;
  for (std::size_t i = 0; i < n_; ++i) {
    acc = ring_.add(acc, ring_.mul(u[i], herm ? ring_.conj(v[i]) : v[i]));
  }
  return acc;
}

Code Code::dual() const {
  std::vector<Word> gens;
  if (ring_.is_field()) {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t f = 0; f < n_; ++f) {
      if (is_pivot[f]) continue;
      Word v(n_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < echelon_.size(); ++i) v[pivots_[i]] = ring_.neg(echelon_[i][f]);
      if (inner_ == InnerProduct::Hermitian)
        for (auto& x : v) x = ring_.conj(x);
      gens.push_back(std::move(v));
    }
  } else {
    const std::uint32_t k = ring_.size();
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t scale = i < diag_.size() ? k / std::gcd(diag_[i], k) : 1;
      if (scale == k) continue;
      Word v(n_);
      bool nonzero = false;
      for (std::size_t r = 0; r < n_; ++r) {
        v[r] = static_cast<Symbol>(static_cast<std::uint64_t>(scale) * col_transform_[i][r] % k);
        nonzero = nonzero || v[r] != 0;
      }
      if (nonzero) gens.push_back(std::move(v));
    }
  }
  return Code(ring_, n_, std::move(gens), inner_);
}

Code Code::permuted(const Permutation& sigma) const {
  if (sigma.size() != n_) throw PreconditionError("permutation size differs from code length");
  std::vector<Word> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(permute(g, sigma));
  return Code(ring_, n_, std::move(gens), inner_);
}

bool Code::same_codewords(const Code& other) const {
  if (!(ring_ == other.ring_) || n_ != other.n_) return false;
  if (size() != other.size()) return false;
  return std::all_of(other.cyclic_.begin(), other.cyclic_.end(),
                     [&](const CyclicGenerator& g) { return contains(g.word); });
}

std::vector<Word> Code::sorted_codewords() const {
  std::vector<Word> out;
  for_each_codeword([&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

Word permute(std::span<const Symbol> u, const Permutation& sigma) {
  if (sigma.size() != u.size()) throw PreconditionError("permutation size differs from word length");
  Word out(u.size());
  std::vector<bool> seen(u.size(), false);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sigma[i] >= u.size() || seen[sigma[i]]) throw PreconditionError("not a permutation");
    seen[sigma[i]] = true;
    out[i] = u[sigma[i]];
  }
  return out;
}

Code permute(const Code& c, const Permutation& sigma) { return c.permuted(sigma); }

Code dual(const Code& c) { return c.dual(); }

std::uint64_t intersection_size(const Code& c, const Code& d) {
  if (!(c.ring() == d.ring()) || c.length() != d.length()) {
    throw PreconditionError("intersection needs codes over the same ring and length");
  }
  const Code& small = c.size() <= d.size() ? c : d;
  const Code& large = c.size() <= d.size() ? d : c;
  std::uint64_t count = 0;
  small.for_each_codeword([&](std::span<const Symbol> w) { count += large.contains(w) ? 1 : 0; });
  return count;
}

std::size_t hamming_weight(std::span<const Symbol> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

std::string to_string(CodeClass c) {
  switch (c) {
    case CodeClass::None: return "None";
    case CodeClass::SelfOrthogonal: return "SelfOrthogonal";
    case CodeClass::SelfDual: return "SelfDual";
    case CodeClass::TypeI: return "TypeI";
    case CodeClass::TypeII: return "TypeII";
    case CodeClass::TypeIII: return "TypeIII";
    case CodeClass::TypeIV: return "TypeIV";
  }
  return "None";
}

bool is_self_orthogonal(const Code& c) {
  const auto& g = c.cyclic_generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (c.inner(g[i].word, g[j].word) != 0) return false;
  return true;
}

bool is_self_dual(const Code& c) {
  if (!is_self_orthogonal(c)) return false;
  return c.size() * c.size() == ipow(BigInt(c.ring().size()), c.length());
}

namespace {

bool all_weights_divisible(const Code& c, std::size_t d) {
  bool ok = true;
  c.for_each_codeword([&](std::span<const Symbol> w) { ok = ok && hamming_weight(w) % d == 0; });
  return ok;
}

}  // namespace

CodeClass classify(const Code& c) {
  if (!is_self_orthogonal(c)) return CodeClass::None;
  if (!is_self_dual(c)) return CodeClass::SelfOrthogonal;
  const RingSpec& r = c.ring();
  const std::size_t n = c.length();
  if (r.is_field() && r.size() == 2) {
    if (n % 8 == 0 && all_weights_divisible(c, 4)) return CodeClass::TypeII;
    if (n % 2 == 0 && all_weights_divisible(c, 2)) return CodeClass::TypeI;
  }
  if (r.is_field() && r.size() == 3 && n % 4 == 0 && all_weights_divisible(c, 3)) return CodeClass::TypeIII;
  if (r.is_field() && r.size() == 4 && c.inner_product() == InnerProduct::Hermitian && n % 2 == 0 &&
      all_weights_divisible(c, 2)) {
    return CodeClass::TypeIV;
  }
  return CodeClass::SelfDual;
}

bool has_type(const Code& c, CodeClass type) {
  CodeClass got = classify(c);
  if (type == CodeClass::TypeI) return got == CodeClass::TypeI || got == CodeClass::TypeII;
  return got == type;
}

}  // namespace cjwe
