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

#include "cjwe/selfdual.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cjwe/error.hpp"
#include "cjwe/parallel.hpp"

namespace cjwe {

std::string to_string(SelfDualType t) {
  switch (t) {
    case SelfDualType::I: return "I";
    case SelfDualType::II: return "II";
    case SelfDualType::III: return "III";
    case SelfDualType::IV: return "IV";
  }
  return "?";
}

SelfDualType parse_self_dual_type(std::string_view s) {
  std::string u;
  for (char ch : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (u == "I") return SelfDualType::I;
  if (u == "II") return SelfDualType::II;
  if (u == "III") return SelfDualType::III;
  if (u == "IV") return SelfDualType::IV;
  throw ParseError("unknown self-dual type '" + std::string(s) + "' (expected I, II, III or IV)");
}

RingSpec ring_for(SelfDualType t) {
  switch (t) {
    case SelfDualType::I:
    case SelfDualType::II: return RingSpec::field(2);
    case SelfDualType::III: return RingSpec::field(3);
    case SelfDualType::IV: return RingSpec::field(4);
  }
  throw PreconditionError("unknown type");
}

InnerProduct inner_for(SelfDualType t) {
  return t == SelfDualType::IV ? InnerProduct::Hermitian : InnerProduct::Euclidean;
}

CodeClass class_for(SelfDualType t) {
  switch (t) {
    case SelfDualType::I: return CodeClass::TypeI;
    case SelfDualType::II: return CodeClass::TypeII;
    case SelfDualType::III: return CodeClass::TypeIII;
    case SelfDualType::IV: return CodeClass::TypeIV;
  }
  return CodeClass::None;
}

namespace {

void check_length(SelfDualType t, std::uint32_t n) {
  switch (t) {
    case SelfDualType::III:
      if (n == 0 || n % 4 != 0) throw PreconditionError("Type III codes need n = 0 mod 4, got n = " + std::to_string(n));
      break;
    case SelfDualType::IV:
    case SelfDualType::I:
      if (n == 0 || n % 2 != 0) throw PreconditionError("Type " + to_string(t) + " codes need even n, got n = " + std::to_string(n));
      break;
    case SelfDualType::II:
      if (n == 0 || n % 8 != 0) throw PreconditionError("Type II codes need n = 0 mod 8, got n = " + std::to_string(n));
      break;
  }
}

void require_formula(SelfDualType t) {
  if (t != SelfDualType::III && t != SelfDualType::IV) {
    throw PreconditionError("no exact formula for Type " + to_string(t) + "; only III and IV are supported");
  }
}

// 2 prod_{i=1}^{upper} (3^i + 1) for III, prod_{i=0}^{upper} (2^(2i+1) + 1) for IV.
BigInt factor_product(SelfDualType t, std::int64_t upper) {
  BigInt out = 1;
  if (t == SelfDualType::III) {
    out = 2;
    for (std::int64_t i = 1; i <= upper; ++i) out *= ipow(BigInt(3), static_cast<unsigned long>(i)) + 1;
  } else {
    for (std::int64_t i = 0; i <= upper; ++i) out *= ipow(BigInt(2), static_cast<unsigned long>(2 * i + 1)) + 1;
  }
  return out;
}

BigInt code_size(SelfDualType t, std::uint32_t n) {
  return ipow(BigInt(t == SelfDualType::III ? 3 : 4), n / 2);
}

}  // namespace

BigInt mass(SelfDualType t, std::uint32_t n) {
  require_formula(t);
  check_length(t, n);
  return factor_product(t, static_cast<std::int64_t>(n / 2) - 1);
}

BigInt count_containing(SelfDualType t, std::uint32_t n, std::uint32_t k) {
  require_formula(t);
  check_length(t, n);
  if (k > n / 2) throw PreconditionError("k must lie in [0, n/2]");
  if (k == n / 2) return 1;
  return factor_product(t, static_cast<std::int64_t>(n / 2) - static_cast<std::int64_t>(k) - 1);
}

Rational delta_closed(SelfDualType t, std::uint32_t n, std::uint32_t moment) {
  require_formula(t);
  check_length(t, n);
  if (moment != 1 && moment != 2) throw PreconditionError("moment must be 1 or 2");
  Rational out;
  if (t == SelfDualType::III) {
    if (moment == 1) {
      out = Rational(4) - Rational(BigInt(4), ipow(BigInt(3), n / 2 - 1) + 1);
    } else {
      const BigInt m = ipow(BigInt(3), n / 2);
      out = Rational(BigInt(40) * m * m, (m + 3) * (m + 9));
    }
  } else {
    if (moment == 1) {
      out = Rational(3) - Rational(BigInt(3), ipow(BigInt(2), n - 1) + 1);
    } else {
      const BigInt m = ipow(BigInt(2), n);
      out = Rational(BigInt(27) * m * m, (m + 2) * (m + 8));
    }
  }
  out.canonicalize();
  return out;
}

Rational delta_from_counts(SelfDualType t, std::uint32_t n, std::uint32_t moment) {
  require_formula(t);
  check_length(t, n);
  if (moment != 1 && moment != 2) throw PreconditionError("moment must be 1 or 2");
  const BigInt total = mass(t, n);
  const BigInt c = code_size(t, n);
  const BigInt n1 = count_containing(t, n, 1);
  BigInt pairs;
  if (moment == 1) {
    pairs = total + (c - 1) * n1;
  } else {
    const BigInt one_dim = (t == SelfDualType::III ? 4 : 5) * (c - 1);
    const BigInt two_dim = (c - 1) * (c - (t == SelfDualType::III ? 3 : 4));
    if (two_dim < 0) throw PreconditionError("negative pair count");
    pairs = total + one_dim * n1;
    if (two_dim != 0) pairs += two_dim * count_containing(t, n, 2);
  }
  Rational out(pairs, total);
  out.canonicalize();
  return out;
}

namespace {

Symbol form(const RingSpec& ring, InnerProduct inner, std::span<const Symbol> u, std::span<const Symbol> v) {
  Symbol s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Symbol b = inner == InnerProduct::Hermitian ? ring.conj(v[i]) : v[i];
    s = ring.add(s, ring.mul(u[i], b));
  }
  return s;
}

void sort_canonical(std::vector<Code>& codes) {
  std::vector<std::pair<std::vector<Word>, std::size_t>> keys;
  for (std::size_t i = 0; i < codes.size(); ++i) keys.emplace_back(codes[i].sorted_codewords(), i);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<Code> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(codes[k.second]);
  codes = std::move(out);
}

}  // namespace

std::vector<Code> scan_self_dual_codes(const RingSpec& ring, InnerProduct inner, std::uint32_t n) {
  if (ring.kind() != RingKind::FiniteField) throw PreconditionError("self-dual scans are defined over fields");
  std::vector<Code> found;
  if (n % 2 != 0) return found;
  const std::uint32_t k = n / 2, q = ring.size();
  BigInt space = ipow(BigInt(q), static_cast<unsigned long>(n) * k);
  if (space > BigInt(std::to_string(limits().max_codewords))) {
    throw BudgetExceeded("subspace scan over " + space.get_str() + " generator tuples exceeds the budget");
  }
  // Self-orthogonal nonzero vectors first; generator tuples are drawn from them.
  std::vector<Word> iso;
  Word w(n, 0);
  for (std::uint64_t idx = 1, words = ipow(BigInt(q), n).get_ui(); idx < words; ++idx) {
    std::uint64_t r = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      w[i] = static_cast<Symbol>(r % q);
      r /= q;
    }
    if (form(ring, inner, w, w) == 0) iso.push_back(w);
  }
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      std::vector<Word> gens;
      for (auto i : pick) gens.push_back(iso[i]);
      Code c(ring, n, gens, inner);
      if (c.dimension() == k) found.push_back(std::move(c));
      return;
    }
    for (std::size_t i = from; i < iso.size(); ++i) {
      bool ok = true;
      for (auto j : pick)
        if (form(ring, inner, iso[i], iso[j]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  if (k == 0) return found;
  rec(0);
  sort_canonical(found);
  return found;
}

std::vector<Code> backtrack_self_dual_codes(const RingSpec& ring, InnerProduct inner, std::uint32_t n) {
  if (ring.kind() != RingKind::FiniteField) throw PreconditionError("self-dual scans are defined over fields");
  if (n % 2 != 0 || n == 0) return {};
  const std::uint32_t k = n / 2, q = ring.size();

  // All pivot column sets of size k, in lexicographic order.
  std::vector<std::vector<std::uint32_t>> pivot_sets;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> choose = [&](std::uint32_t from) {
    if (cur.size() == k) {
      pivot_sets.push_back(cur);
      return;
    }
    for (std::uint32_t c = from; c + (k - cur.size()) <= n; ++c) {
      cur.push_back(c);
      choose(c + 1);
      cur.pop_back();
    }
  };
  choose(0);

  std::vector<std::vector<Code>> partial(pivot_sets.size());
  parallel_chunks(pivot_sets.size(), pivot_sets.size(), [&](std::size_t chunk, std::uint64_t, std::uint64_t) {
    const auto& piv = pivot_sets[chunk];
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Word> rows(k, Word(n, 0));
    std::function<void(std::uint32_t)> fill_row = [&](std::uint32_t r) {
      if (r == k) {
        partial[chunk].emplace_back(ring, n, rows, inner);
        return;
      }
      std::vector<std::uint32_t> free_cols;
      for (std::uint32_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      Word& row = rows[r];
      std::fill(row.begin(), row.end(), 0);
      row[piv[r]] = 1;
      std::vector<Symbol> digits(free_cols.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < free_cols.size(); ++i) row[free_cols[i]] = digits[i];
        bool ok = form(ring, inner, row, row) == 0;
        for (std::uint32_t j = 0; ok && j < r; ++j) ok = form(ring, inner, row, rows[j]) == 0;
        if (ok) fill_row(r + 1);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    };
    fill_row(0);
  });

  std::vector<Code> found;
  for (auto& part : partial)
    for (auto& c : part) found.push_back(std::move(c));
  sort_canonical(found);
  return found;
}

SelfDualFamily enumerate_selfdual(SelfDualType t, std::uint32_t n) {
  check_length(t, n);
  const std::uint32_t cap = t == SelfDualType::IV ? 4 : 8;
  if (n > cap) {
    throw BudgetExceeded("enumeration of Type " + to_string(t) + " codes is limited to n <= " + std::to_string(cap));
  }
  const RingSpec ring = ring_for(t);
  const InnerProduct inner = inner_for(t);
  std::vector<Code> all = n <= 4 ? scan_self_dual_codes(ring, inner, n) : backtrack_self_dual_codes(ring, inner, n);
  SelfDualFamily fam{t, n, {}};
  for (auto& c : all)
    if (has_type(c, class_for(t))) fam.codes.push_back(std::move(c));
  return fam;
}

Rational delta_empirical(const Code& c, const SelfDualFamily& family, std::uint32_t moment) {
  if (family.codes.empty()) throw PreconditionError("empty family");
  if (moment < 1) throw PreconditionError("moment must be positive");
  for (const auto& d : family.codes) {
    if (!(d.ring() == c.ring()) || d.length() != c.length()) {
      throw PreconditionError("code does not match the family's ring and length");
    }
  }
  constexpr std::size_t kChunks = 64;
  std::vector<BigInt> partial(kChunks, 0);
  parallel_chunks(family.codes.size(), kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const BigInt m(std::to_string(intersection_size(c, family.codes[i])));
      partial[chunk] += ipow(m, moment);
    }
  });
  BigInt sum = 0;
  for (const auto& v : partial) sum += v;
  Rational out(sum, BigInt(std::to_string(family.codes.size())));
  out.canonicalize();
  return out;
}

}  // namespace cjwe
