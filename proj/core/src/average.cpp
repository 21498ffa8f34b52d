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

#include "cjwe/average.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cjwe/error.hpp"
#include "cjwe/parallel.hpp"

namespace cjwe {

namespace {

constexpr std::size_t kChunks = 64;

void check_compatible(std::span<const Code> codes) {
  if (codes.empty()) throw PreconditionError("at least one code is required");
  for (const auto& c : codes) {
    if (!(c.ring() == codes[0].ring()) || c.length() != codes[0].length()) {
      throw PreconditionError("codes differ in ring or length");
    }
  }
}

// Dense counts of a composition restricted to a list of support indices.
std::vector<std::uint32_t> counts_on(const CompositionTensor& t, const std::vector<std::uint32_t>& support) {
  std::vector<std::uint32_t> out;
  out.reserve(support.size());
  for (auto idx : support) out.push_back(t.at(idx));
  return out;
}

Rational rational_coeff(const CycQ& c) { return c.to_rational(); }

}  // namespace

MultinomialCache::MultinomialCache(std::uint32_t max_n) : fact_(max_n + 1) {
  fact_[0] = 1;
  for (std::uint32_t i = 1; i <= max_n; ++i) fact_[i] = fact_[i - 1] * i;
}

const BigInt& MultinomialCache::factorial(std::uint32_t a) const {
  if (a >= fact_.size()) throw PreconditionError("factorial argument exceeds the cache");
  return fact_[a];
}

BigInt MultinomialCache::multinomial(std::uint32_t a, std::span<const std::uint32_t> parts) const {
  std::uint64_t sum = 0;
  BigInt den = 1;
  for (auto b : parts) {
    sum += b;
    den *= factorial(b);
  }
  if (sum != a) throw PreconditionError("multinomial parts do not sum to the total");
  BigInt out = factorial(a) / den;
  return out;
}

void for_each_contingency_table(std::span<const std::uint32_t> row_sums,
                                std::span<const std::uint32_t> col_sums,
                                const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const std::size_t rows = row_sums.size(), cols = col_sums.size();
  const std::uint64_t rtotal = std::accumulate(row_sums.begin(), row_sums.end(), std::uint64_t{0});
  const std::uint64_t ctotal = std::accumulate(col_sums.begin(), col_sums.end(), std::uint64_t{0});
  if (rtotal != ctotal) return;
  if (rows == 0 || cols == 0) {
    if (rtotal == 0) visit({});
    return;
  }
  std::vector<std::uint32_t> table(rows * cols, 0);
  std::vector<std::uint32_t> col_left(col_sums.begin(), col_sums.end());
  // Suffix sums of col_left within the current row, for pruning.
  std::function<void(std::size_t, std::size_t, std::uint32_t)> rec = [&](std::size_t r, std::size_t c,
                                                                          std::uint32_t row_left) {
    if (r + 1 == rows) {
      // The last row is forced by the remaining column sums.
      for (std::size_t j = 0; j < cols; ++j) table[r * cols + j] = col_left[j];
      visit(table);
      return;
    }
    if (c + 1 == cols) {
      if (row_left > col_left[c]) return;
      table[r * cols + c] = row_left;
      col_left[c] -= row_left;
      rec(r + 1, 0, row_sums[r + 1]);
      col_left[c] += row_left;
      table[r * cols + c] = 0;
      return;
    }
    std::uint64_t rest = 0;
    for (std::size_t j = c + 1; j < cols; ++j) rest += col_left[j];
    const std::uint32_t hi = std::min(row_left, col_left[c]);
    const std::uint32_t lo = rest >= row_left ? 0 : static_cast<std::uint32_t>(row_left - rest);
    for (std::uint32_t t = lo; t <= hi; ++t) {
      table[r * cols + c] = t;
      col_left[c] -= t;
      rec(r, c + 1, row_left - t);
      col_left[c] += t;
    }
    table[r * cols + c] = 0;
  };
  rec(0, 0, row_sums[0]);
}

Enumerator avg_gfold(std::span<const Code> codes) {
  check_compatible(codes);
  const RingSpec& ring = codes[0].ring();
  const auto n = static_cast<std::uint32_t>(codes[0].length());
  const auto g = static_cast<std::uint32_t>(codes.size());
  const std::uint32_t q = ring.size();
  if (g == 1) return cwe(codes[0]);

  const Enumerator first = cwe(codes[0]);
  const Enumerator rest = gfold_cjwe(codes.subspan(1));
  std::uint64_t col_cells = 1;
  for (std::uint32_t i = 1; i < g; ++i) col_cells *= q;

  std::vector<std::pair<CompositionTensor, Rational>> rows_list, cols_list;
  for (const auto& [k, c] : first.terms()) rows_list.emplace_back(k, rational_coeff(c));
  for (const auto& [k, c] : rest.terms()) cols_list.emplace_back(k, rational_coeff(c));

  MultinomialCache mc(n);
  using Acc = std::unordered_map<CompositionTensor, Rational, CompositionHash>;
  std::vector<Acc> partial(kChunks);
  const std::uint64_t pairs = rows_list.size() * cols_list.size();
  parallel_chunks(pairs, kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Acc& acc = partial[chunk];
    for (std::uint64_t t = begin; t < end; ++t) {
      const auto& [r, ar] = rows_list[t / cols_list.size()];
      const auto& [eta, as] = cols_list[t % cols_list.size()];
      std::vector<std::uint32_t> row_idx, col_idx;
      for (const auto& e : r.entries()) row_idx.push_back(e.first);
      for (const auto& e : eta.entries()) col_idx.push_back(e.first);
      const auto row_sums = counts_on(r, row_idx);
      const auto col_sums = counts_on(eta, col_idx);
      const Rational base = ar * as / Rational(mc.multinomial(n, row_sums));
      for_each_contingency_table(row_sums, col_sums, [&](std::span<const std::uint32_t> table) {
        BigInt weight = 1;
        std::vector<std::uint32_t> column(row_idx.size());
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
          for (std::size_t i = 0; i < row_idx.size(); ++i) column[i] = table[i * col_idx.size() + j];
          weight *= mc.multinomial(col_sums[j], column);
        }
        std::vector<CompositionTensor::Entry> mono;
        for (std::size_t i = 0; i < row_idx.size(); ++i)
          for (std::size_t j = 0; j < col_idx.size(); ++j) {
            const auto cnt = table[i * col_idx.size() + j];
            if (cnt) mono.emplace_back(static_cast<std::uint32_t>(row_idx[i] * col_cells + col_idx[j]), cnt);
          }
        auto key = CompositionTensor::from_entries(q, g, std::move(mono));
        Rational c = base * Rational(weight);
        auto [it, ins] = acc.try_emplace(std::move(key), c);
        if (!ins) it->second += c;
      });
    }
  });

  Acc merged;
  for (auto& part : partial)
    for (auto& [k, c] : part) {
      auto [it, ins] = merged.try_emplace(k, c);
      if (!ins) it->second += c;
    }
  Enumerator out(ring, g, n);
  for (auto& [k, c] : merged) {
    c.canonicalize();
    out.add_term(k, CycQ(c));
  }
  return out;
}

Enumerator avg_cjwe(const Code& c, const Code& d) {
  const Code codes[] = {c, d};
  return avg_gfold(codes);
}

namespace {

std::uint64_t checked_factorial(std::size_t n) {
  std::uint64_t f = 1;
  const std::uint64_t cap = limits().max_permutations;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) {
      throw BudgetExceeded(std::to_string(n) + "! permutations exceed the budget of " + std::to_string(cap));
    }
  }
  return f;
}

// The rank-th permutation of {0..n-1} in lexicographic order.
Permutation unrank_permutation(std::uint64_t rank, std::size_t n) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  Permutation p;
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t k = rank / fact[i];
    rank %= fact[i];
    p.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return p;
}

}  // namespace

Enumerator avg_cjwe_bruteforce(std::span<const Code> codes) {
  check_compatible(codes);
  const RingSpec& ring = codes[0].ring();
  const std::size_t n = codes[0].length();
  const auto g = static_cast<std::uint32_t>(codes.size());
  const std::uint32_t q = ring.size();
  const std::uint64_t perms = checked_factorial(n);

  BigInt tuples = 1;
  for (const auto& c : codes) tuples *= c.size();
  if (tuples > BigInt(std::to_string(limits().max_codewords))) {
    throw BudgetExceeded("joint enumeration over " + tuples.get_str() + " codeword tuples exceeds the budget");
  }

  std::uint64_t tail_cells = 1;
  for (std::uint32_t i = 1; i < g; ++i) tail_cells *= q;
  const CodewordList first = codes[0].codewords();

  // Joint columns of codes 2..g, as per-coordinate flattened indices.
  std::vector<std::vector<std::uint32_t>> tails{std::vector<std::uint32_t>(n, 0)};
  for (std::uint32_t j = 1; j < g; ++j) {
    const CodewordList words = codes[j].codewords();
    std::vector<std::vector<std::uint32_t>> next;
    next.reserve(tails.size() * words.size());
    for (const auto& t : tails)
      for (std::size_t w = 0; w < words.size(); ++w) {
        auto u = t;
        for (std::size_t i = 0; i < n; ++i) u[i] = u[i] * q + words[w][i];
        next.push_back(std::move(u));
      }
    tails = std::move(next);
  }

  using Acc = std::unordered_map<CompositionTensor, std::uint64_t, CompositionHash>;
  std::vector<Acc> partial(kChunks);
  parallel_chunks(perms, kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Acc& acc = partial[chunk];
    std::vector<std::uint32_t> flat(n);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const Permutation sigma = unrank_permutation(rank, n);
      for (std::size_t w = 0; w < first.size(); ++w) {
        const auto u = first[w];
        for (const auto& tail : tails) {
          std::vector<CompositionTensor::Entry> entries;
          entries.reserve(n);
          for (std::size_t i = 0; i < n; ++i)
            entries.emplace_back(static_cast<std::uint32_t>(u[sigma[i]] * tail_cells + tail[i]), 1);
          ++acc[CompositionTensor::from_entries(q, g, std::move(entries))];
        }
      }
    }
  });

  Acc merged;
  for (auto& part : partial)
    for (auto& [k, c] : part) merged[k] += c;
  Enumerator out(ring, g, static_cast<std::uint32_t>(n));
  const Rational denom(BigInt(std::to_string(perms)));
  for (const auto& [k, c] : merged) {
    Rational v(BigInt(std::to_string(c)), denom.get_num());
    v.canonicalize();
    out.add_term(k, CycQ(v));
  }
  return out;
}

Rational avg_intersection(const Code& c, const Code& d) {
  const Code codes[] = {c, d};
  check_compatible(codes);
  const auto n = static_cast<std::uint32_t>(c.length());
  const Enumerator pc = cwe(c), pd = cwe(d);
  MultinomialCache mc(n);
  Rational sum = 0;
  for (const auto& [r, a] : pc.terms()) {
    const CycQ b = pd.coefficient(r);
    if (b.is_zero()) continue;
    sum += a.to_rational() * b.to_rational() / Rational(mc.multinomial(n, r.dense()));
  }
  sum.canonicalize();
  return sum;
}

Rational avg_intersection_bruteforce(const Code& c, const Code& d) {
  const Code codes[] = {c, d};
  check_compatible(codes);
  const std::size_t n = c.length();
  const std::uint64_t perms = checked_factorial(n);
  std::vector<std::uint64_t> partial(kChunks, 0);
  parallel_chunks(perms, kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t rank = begin; rank < end; ++rank)
      partial[chunk] += intersection_size(c, permute(d, unrank_permutation(rank, n)));
  });
  BigInt total = 0;
  for (auto v : partial) total += BigInt(std::to_string(v));
  Rational out(total, BigInt(std::to_string(perms)));
  out.canonicalize();
  return out;
}

}  // namespace cjwe
