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

#include "cjwe/enumerator.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <limits>
#include <unordered_map>

#include "cjwe/average.hpp"
#include "cjwe/error.hpp"
#include "cjwe/parallel.hpp"

namespace cjwe {

namespace {

std::uint64_t checked_cells(std::uint32_t q, std::uint32_t g) {
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < g; ++i) {
    cells *= q;
    if (cells > std::numeric_limits<std::uint32_t>::max()) {
      throw PreconditionError("|R|^g exceeds the flattened index range");
    }
  }
  return cells;
}

// Run-length encodes sorted flat indices into composition entries.
std::vector<CompositionTensor::Entry> run_lengths(std::vector<std::uint32_t>& flat) {
  std::sort(flat.begin(), flat.end());
  std::vector<CompositionTensor::Entry> out;
  for (std::size_t i = 0; i < flat.size();) {
    std::size_t j = i;
    while (j < flat.size() && flat[j] == flat[i]) ++j;
    out.emplace_back(flat[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::uint32_t flatten_index(std::span<const Symbol> a, std::uint32_t q) {
  std::uint64_t flat = 0;
  for (auto s : a) flat = flat * q + s;
  return static_cast<std::uint32_t>(flat);
}

std::vector<Symbol> unflatten_index(std::uint32_t flat, std::uint32_t q, std::uint32_t g) {
  std::vector<Symbol> a(g);
  for (std::uint32_t i = g; i-- > 0;) {
    a[i] = static_cast<Symbol>(flat % q);
    flat /= q;
  }
  return a;
}

CompositionTensor::CompositionTensor(std::uint32_t q, std::uint32_t g) : q_(q), g_(g) { checked_cells(q, g); }

CompositionTensor CompositionTensor::from_dense(std::uint32_t q, std::uint32_t g,
                                                std::span<const std::uint32_t> dense) {
  CompositionTensor t(q, g);
  if (dense.size() != t.cells()) throw PreconditionError("dense composition has the wrong length");
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) t.e_.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return t;
}

CompositionTensor CompositionTensor::from_entries(std::uint32_t q, std::uint32_t g, std::vector<Entry> entries) {
  CompositionTensor t(q, g);
  std::sort(entries.begin(), entries.end());
  for (const auto& [idx, cnt] : entries) {
    if (idx >= t.cells()) throw PreconditionError("composition index out of range");
    if (cnt == 0) continue;
    if (!t.e_.empty() && t.e_.back().first == idx)
      t.e_.back().second += cnt;
    else
      t.e_.emplace_back(idx, cnt);
  }
  return t;
}

std::uint64_t CompositionTensor::cells() const { return checked_cells(q_, g_); }

std::uint32_t CompositionTensor::at(std::uint32_t flat) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Entry{flat, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return it != e_.end() && it->first == flat ? it->second : 0;
}

std::uint64_t CompositionTensor::total() const {
  std::uint64_t s = 0;
  for (const auto& e : e_) s += e.second;
  return s;
}

std::vector<std::uint32_t> CompositionTensor::dense() const {
  std::vector<std::uint32_t> d(cells(), 0);
  for (const auto& [idx, cnt] : e_) d[idx] = cnt;
  return d;
}

CompositionTensor CompositionTensor::operator+(const CompositionTensor& o) const {
  if (q_ != o.q_ || g_ != o.g_) throw PreconditionError("composition shapes differ");
  CompositionTensor out(q_, g_);
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      out.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      out.e_.push_back(o.e_[j++]);
    } else {
      out.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int compare_dense(const CompositionTensor& a, const CompositionTensor& b) {
  constexpr std::uint64_t kEnd = std::numeric_limits<std::uint64_t>::max();
  std::size_t i = 0, j = 0;
  for (;;) {
    std::uint64_t ia = i < a.e_.size() ? a.e_[i].first : kEnd;
    std::uint64_t ib = j < b.e_.size() ? b.e_[j].first : kEnd;
    if (ia == kEnd && ib == kEnd) return 0;
    if (ia == ib) {
      if (a.e_[i].second != b.e_[j].second) return a.e_[i].second < b.e_[j].second ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The one with a positive entry at the smaller index is larger.
      return ia < ib ? 1 : -1;
    }
  }
}

std::size_t CompositionTensor::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [idx, cnt] : e_) {
    h ^= (static_cast<std::uint64_t>(idx) << 32) | cnt;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

CompositionTensor composition(std::span<const Symbol> u, std::uint32_t q) {
  std::vector<std::uint32_t> flat(u.begin(), u.end());
  for (auto s : flat)
    if (s >= q) throw PreconditionError("symbol out of range for the alphabet");
  return CompositionTensor::from_entries(q, 1, run_lengths(flat));
}

CompositionTensor bicomposition(std::span<const Symbol> u, std::span<const Symbol> v, std::uint32_t q) {
  const std::span<const Symbol> words[] = {u, v};
  return gcomposition(words, q);
}

CompositionTensor gcomposition(std::span<const std::span<const Symbol>> words, std::uint32_t q) {
  if (words.empty()) throw PreconditionError("g-fold composition needs at least one word");
  const std::size_t n = words[0].size();
  for (const auto& w : words) {
    if (w.size() != n) throw PreconditionError("words have different lengths");
    for (auto s : w)
      if (s >= q) throw PreconditionError("symbol out of range for the alphabet");
  }
  const auto g = static_cast<std::uint32_t>(words.size());
  checked_cells(q, g);
  std::vector<std::uint32_t> flat(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t idx = 0;
    for (const auto& w : words) idx = idx * q + w[i];
    flat[i] = static_cast<std::uint32_t>(idx);
  }
  return CompositionTensor::from_entries(q, g, run_lengths(flat));
}

CompositionTensor marginalize(const CompositionTensor& t, std::uint32_t axis) {
  const std::uint32_t g = t.fold(), q = t.ring_size();
  if (axis < 1 || axis > g) throw PreconditionError("axis out of range");
  if (g < 2) throw PreconditionError("cannot marginalize a 1-fold composition");
  std::vector<CompositionTensor::Entry> out;
  for (const auto& [idx, cnt] : t.entries()) {
    auto a = unflatten_index(idx, q, g);
    a.erase(a.begin() + (axis - 1));
    out.emplace_back(flatten_index(a, q), cnt);
  }
  return CompositionTensor::from_entries(q, g - 1, std::move(out));
}

CompositionTensor axis_composition(const CompositionTensor& t, std::uint32_t axis) {
  const std::uint32_t g = t.fold(), q = t.ring_size();
  if (axis < 1 || axis > g) throw PreconditionError("axis out of range");
  std::vector<CompositionTensor::Entry> out;
  for (const auto& [idx, cnt] : t.entries()) {
    auto a = unflatten_index(idx, q, g);
    out.emplace_back(a[axis - 1], cnt);
  }
  return CompositionTensor::from_entries(q, 1, std::move(out));
}

// ---------------------------------------------------------------------------

Enumerator::Enumerator(RingSpec ring, std::uint32_t g, std::uint32_t n) : ring_(std::move(ring)), g_(g), n_(n) {
  if (g_ < 1) throw PreconditionError("enumerator fold must be at least 1");
  checked_cells(ring_.size(), g_);
}

std::uint32_t Enumerator::variables() const { return static_cast<std::uint32_t>(checked_cells(ring_.size(), g_)); }

void Enumerator::check_key(const CompositionTensor& t) const {
  if (t.ring_size() != ring_.size() || t.fold() != g_) throw PreconditionError("monomial shape mismatch");
  if (t.total() != n_) throw PreconditionError("monomial degree differs from n");
}

void Enumerator::add_term(const CompositionTensor& monomial, const CycQ& c) {
  check_key(monomial);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycQ Enumerator::coefficient(const CompositionTensor& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? CycQ() : it->second;
}

CycQ Enumerator::mass() const {
  CycQ s;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool operator==(const Enumerator& a, const Enumerator& b) {
  return a.ring_ == b.ring_ && a.g_ == b.g_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string Enumerator::to_json() const {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["ring"] = ring_.literal();
  doc["g"] = g_;
  doc["n"] = n_;
  ojson terms = ojson::array();
  for (const auto& [mono, c] : terms_) {
    ojson term;
    term["exp"] = mono.dense();
    if (c.is_rational()) {
      term["coeff"] = to_string(c.to_rational());
    } else {
      const CycQ canon = c.canonical();
      ojson coeffs = ojson::array();
      for (const auto& r : canon.coeffs()) coeffs.push_back(to_string(r));
      term["coeff"] = ojson{{"m", canon.conductor()}, {"coeffs", coeffs}};
    }
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

Enumerator Enumerator::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid enumerator JSON: ") + e.what());
  }
  try {
    RingSpec ring = RingSpec::parse(doc.at("ring").get<std::string>());
    Enumerator p(ring, doc.at("g").get<std::uint32_t>(), doc.at("n").get<std::uint32_t>());
    for (const auto& term : doc.at("terms")) {
      auto dense = term.at("exp").get<std::vector<std::uint32_t>>();
      auto key = CompositionTensor::from_dense(ring.size(), p.g_, dense);
      const auto& coeff = term.at("coeff");
      CycQ c;
      if (coeff.is_string()) {
        c = parse_rational(coeff.get<std::string>());
      } else {
        std::vector<Rational> rs;
        for (const auto& s : coeff.at("coeffs")) rs.push_back(parse_rational(s.get<std::string>()));
        c = CycQ::from_poly(coeff.at("m").get<std::uint32_t>(), rs);
      }
      p.add_term(key, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed enumerator JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("inconsistent enumerator JSON: ") + e.what());
  }
}

Enumerator from_counts(const RingSpec& ring, std::uint32_t g, std::uint32_t n,
                       const std::vector<std::pair<CompositionTensor, std::uint64_t>>& counts) {
  Enumerator p(ring, g, n);
  for (const auto& [k, c] : counts) p.add_term(k, CycQ(Rational(BigInt(std::to_string(c)))));
  return p;
}

// ---------------------------------------------------------------------------

namespace {

using CountMap = std::unordered_map<CompositionTensor, std::uint64_t, CompositionHash>;

constexpr std::size_t kChunks = 64;

}  // namespace

Enumerator gfold_cjwe(std::span<const Code> codes) {
  if (codes.empty()) throw PreconditionError("g-fold enumerator needs at least one code");
  const RingSpec& ring = codes[0].ring();
  const std::size_t n = codes[0].length();
  BigInt tuples = 1;
  for (const auto& c : codes) {
    if (!(c.ring() == ring) || c.length() != n) throw PreconditionError("codes differ in ring or length");
    tuples *= c.size();
  }
  if (tuples > BigInt(std::to_string(limits().max_codewords))) {
    throw BudgetExceeded("joint enumeration over " + tuples.get_str() + " codeword tuples exceeds the budget of " +
                         std::to_string(limits().max_codewords));
  }
  const auto g = static_cast<std::uint32_t>(codes.size());
  const std::uint32_t q = ring.size();
  checked_cells(q, g);

  std::vector<CodewordList> lists;
  for (const auto& c : codes) lists.push_back(c.codewords());
  const std::uint64_t total = tuples.get_ui();

  std::vector<CountMap> partial(kChunks);
  parallel_chunks(total, kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    CountMap& acc = partial[chunk];
    std::vector<std::size_t> digit(g);
    std::uint64_t rest = begin;
    for (std::size_t j = g; j-- > 0;) {
      digit[j] = rest % lists[j].size();
      rest /= lists[j].size();
    }
    std::vector<std::uint32_t> flat(n);
    for (std::uint64_t r = begin; r < end; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t idx = 0;
        for (std::size_t j = 0; j < g; ++j) idx = idx * q + lists[j][digit[j]][i];
        flat[i] = static_cast<std::uint32_t>(idx);
      }
      std::vector<std::uint32_t> scratch = flat;
      ++acc[CompositionTensor::from_entries(q, g, run_lengths(scratch))];
      for (std::size_t j = g; j-- > 0;) {
        if (++digit[j] < lists[j].size()) break;
        digit[j] = 0;
      }
    }
  });

  CountMap merged;
  for (auto& part : partial)
    for (auto& [k, c] : part) merged[k] += c;
  Enumerator p(ring, g, static_cast<std::uint32_t>(n));
  for (const auto& [k, c] : merged) p.add_term(k, CycQ(Rational(BigInt(std::to_string(c)))));
  return p;
}

Enumerator cwe(const Code& c) { return gfold_cjwe(std::span<const Code>(&c, 1)); }

Enumerator cjwe(const Code& c, const Code& d) {
  const Code codes[] = {c, d};
  return gfold_cjwe(codes);
}

Enumerator add(const Enumerator& p, const Enumerator& q) {
  if (!(p.ring() == q.ring()) || p.fold() != q.fold() || p.length() != q.length()) {
    throw PreconditionError("cannot add enumerators of different shapes");
  }
  Enumerator out = p;
  for (const auto& [k, c] : q.terms()) out.add_term(k, c);
  return out;
}

Enumerator scale(const Enumerator& p, const CycQ& c) {
  Enumerator out(p.ring(), p.fold(), p.length());
  if (c.is_zero()) return out;
  for (const auto& [k, v] : p.terms()) out.add_term(k, v * c);
  return out;
}

// ---------------------------------------------------------------------------

CycMatrix CycMatrix::identity(std::size_t dim) {
  CycMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycQ(1);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionError("matrix dimensions differ");
  CycMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    }
  return out;
}

CycMatrix CycMatrix::conj_transpose() const {
  CycMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

// Sparse polynomial over local variable indices used during expansion.
using LocalPoly = std::vector<std::pair<std::vector<CompositionTensor::Entry>, CycQ>>;

// (sum_{L in support} coeff[L] x_L)^e by the multinomial theorem.
LocalPoly expand_power(const std::vector<std::pair<std::uint32_t, CycQ>>& linear, std::uint32_t e,
                       const MultinomialCache& mc) {
  LocalPoly out;
  const std::size_t s = linear.size();
  if (s == 0) return out;
  // Precompute powers of each coefficient.
  std::vector<std::vector<CycQ>> pows(s);
  for (std::size_t i = 0; i < s; ++i) {
    pows[i].push_back(CycQ(1));
    for (std::uint32_t t = 1; t <= e; ++t) pows[i].push_back(pows[i].back() * linear[i].second);
  }
  std::vector<std::uint32_t> parts(s, 0);
  // Enumerate compositions of e into s parts.
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
    if (pos + 1 == s) {
      parts[pos] = left;
      CycQ c = CycQ(Rational(mc.multinomial(e, parts)));
      std::vector<CompositionTensor::Entry> mono;
      for (std::size_t i = 0; i < s; ++i) {
        if (parts[i] == 0) continue;
        c *= pows[i][parts[i]];
        mono.emplace_back(linear[i].first, parts[i]);
      }
      if (!c.is_zero()) out.emplace_back(std::move(mono), std::move(c));
      return;
    }
    for (std::uint32_t t = 0; t <= left; ++t) {
      parts[pos] = t;
      rec(pos + 1, left - t);
    }
  };
  rec(0, e);
  return out;
}

LocalPoly multiply(const LocalPoly& a, const LocalPoly& b) {
  std::unordered_map<CompositionTensor, CycQ, CompositionHash> acc;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<CompositionTensor::Entry> merged = ma;
      merged.insert(merged.end(), mb.begin(), mb.end());
      // q = 2^32-1 placeholder shape; entries only carry indices here.
      auto key = CompositionTensor::from_entries(std::numeric_limits<std::uint32_t>::max(), 1, std::move(merged));
      auto [it, ins] = acc.try_emplace(std::move(key), ca * cb);
      if (!ins) it->second += ca * cb;
    }
  LocalPoly out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k.entries(), std::move(c));
  return out;
}

using TermAccumulator = std::unordered_map<CompositionTensor, CycQ, CompositionHash>;

Enumerator collect(const Enumerator& like, std::vector<TermAccumulator>& partial) {
  TermAccumulator merged;
  for (auto& part : partial)
    for (auto& [k, c] : part) {
      auto [it, ins] = merged.try_emplace(k, c);
      if (!ins) it->second += c;
    }
  Enumerator out(like.ring(), like.fold(), like.length());
  for (const auto& [k, c] : merged) out.add_term(k, c);
  return out;
}

}  // namespace

Enumerator substitute_linear(const Enumerator& p, const CycMatrix& m) {
  const std::uint32_t vars = p.variables();
  if (m.dim() != vars) throw PreconditionError("substitution matrix must be |R|^g square");
  const std::uint32_t q = p.ring().size(), g = p.fold();
  MultinomialCache mc(p.length());

  std::vector<std::vector<std::pair<std::uint32_t, CycQ>>> rows(vars);
  for (std::uint32_t k = 0; k < vars; ++k)
    for (std::uint32_t l = 0; l < vars; ++l)
      if (!m(k, l).is_zero()) rows[k].emplace_back(l, m(k, l));

  std::vector<std::pair<CompositionTensor, CycQ>> input(p.terms().begin(), p.terms().end());
  std::vector<TermAccumulator> partial(kChunks);
  parallel_chunks(input.size(), kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      const auto& [mono, coeff] = input[t];
      LocalPoly acc{{{}, coeff}};
      for (const auto& [var, e] : mono.entries()) {
        acc = multiply(acc, expand_power(rows[var], e, mc));
        if (acc.empty()) break;
      }
      for (auto& [entries, c] : acc) {
        auto key = CompositionTensor::from_entries(q, g, entries);
        auto [it, ins] = partial[chunk].try_emplace(std::move(key), c);
        if (!ins) it->second += c;
      }
    }
  });
  return collect(p, partial);
}

namespace {

using Entries = std::vector<CompositionTensor::Entry>;

struct EntriesHash {
  std::size_t operator()(const Entries& e) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [idx, cnt] : e) {
      h ^= (static_cast<std::uint64_t>(idx) << 32) | cnt;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using EntryPoly = std::unordered_map<Entries, CycQ, EntriesHash>;

}  // namespace

Enumerator substitute_axis(const Enumerator& p, std::uint32_t axis, const CycMatrix& a) {
  const std::uint32_t q = p.ring().size(), g = p.fold();
  if (axis < 1 || axis > g) throw PreconditionError("axis out of range");
  if (a.dim() != q) throw PreconditionError("axis matrix must be |R| square");
  MultinomialCache mc(p.length());

  // Stride of the axis inside flattened indices (a_1 most significant).
  std::uint64_t stride = 1;
  for (std::uint32_t i = axis; i < g; ++i) stride *= q;
  const std::uint64_t cells = checked_cells(q, g);

  // Fibers are the index sets {base + v*stride : v in R}; list their bases.
  std::vector<std::uint64_t> bases;
  for (std::uint64_t idx = 0; idx < cells; ++idx)
    if (idx / stride % q == 0) bases.push_back(idx);
  std::vector<std::uint32_t> fiber_of(cells);
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (std::uint32_t v = 0; v < q; ++v) fiber_of[bases[b] + v * stride] = static_cast<std::uint32_t>(b);

  std::vector<std::vector<std::pair<std::uint32_t, CycQ>>> rows(q);
  for (std::uint32_t z = 0; z < q; ++z)
    for (std::uint32_t v = 0; v < q; ++v)
      if (!a(z, v).is_zero()) rows[z].emplace_back(v, a(z, v));

  // prod_z (sum_v A[z,v] y_v)^{e_z} for a fiber exponent vector, memoized.
  std::mutex memo_mutex;
  std::map<Entries, std::shared_ptr<const LocalPoly>> memo;
  auto fiber_poly = [&](const Entries& fiber_exp) {
    {
      std::lock_guard lock(memo_mutex);
      auto it = memo.find(fiber_exp);
      if (it != memo.end()) return it->second;
    }
    LocalPoly acc{{{}, CycQ(1)}};
    for (const auto& [z, e] : fiber_exp) acc = multiply(acc, expand_power(rows[z], e, mc));
    auto shared = std::make_shared<const LocalPoly>(std::move(acc));
    std::lock_guard lock(memo_mutex);
    return memo.emplace(fiber_exp, shared).first->second;
  };

  // Each term split into per-fiber exponent vectors (local digit v, count).
  struct Split {
    std::vector<Entries> fibers;
    const CycQ* coeff;
  };
  std::vector<Split> terms;
  terms.reserve(p.term_count());
  for (const auto& [mono, coeff] : p.terms()) {
    Split s{std::vector<Entries>(bases.size()), &coeff};
    for (const auto& [idx, e] : mono.entries())
      s.fibers[fiber_of[idx]].emplace_back(static_cast<std::uint32_t>(idx / stride % q), e);
    for (auto& f : s.fibers) std::sort(f.begin(), f.end());
    terms.push_back(std::move(s));
  }
  std::sort(terms.begin(), terms.end(), [](const Split& x, const Split& y) { return x.fibers < y.fibers; });

  // Horner-style evaluation over fibers: terms sharing the exponents of fibers
  // 0..b-1 are summed before being multiplied into those fibers, so the
  // character sums cancel as early as possible.
  std::function<EntryPoly(std::size_t, std::size_t, std::size_t)> expand = [&](std::size_t lo, std::size_t hi,
                                                                              std::size_t b) {
    EntryPoly acc;
    if (b == bases.size()) {
      CycQ sum;
      for (std::size_t t = lo; t < hi; ++t) sum += *terms[t].coeff;
      if (!sum.is_zero()) acc.emplace(Entries{}, std::move(sum));
      return acc;
    }
    for (std::size_t i = lo; i < hi;) {
      std::size_t j = i;
      while (j < hi && terms[j].fibers[b] == terms[i].fibers[b]) ++j;
      const EntryPoly child = expand(i, j, b + 1);
      if (!child.empty()) {
        const auto poly = fiber_poly(terms[i].fibers[b]);
        for (const auto& [local, lc] : *poly) {
          Entries mapped;
          for (const auto& [v, e] : local) mapped.emplace_back(static_cast<std::uint32_t>(bases[b] + v * stride), e);
          for (const auto& [rest, rc] : child) {
            Entries key = mapped;
            key.insert(key.end(), rest.begin(), rest.end());
            std::sort(key.begin(), key.end());
            CycQ c = lc * rc;
            auto [it, ins] = acc.try_emplace(std::move(key), c);
            if (!ins) it->second += c;
          }
        }
      }
      i = j;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
  };

  // Top-level groups (distinct exponents on fiber 0) are independent.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j].fibers[0] == terms[i].fibers[0]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::vector<TermAccumulator> partial(kChunks);
  parallel_chunks(groups.size(), kChunks, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t gi = begin; gi < end; ++gi) {
      const auto [lo, hi] = groups[gi];
      const EntryPoly child = expand(lo, hi, 1);
      if (child.empty()) continue;
      const auto poly = fiber_poly(terms[lo].fibers[0]);
      for (const auto& [local, lc] : *poly) {
        Entries mapped;
        for (const auto& [v, e] : local) mapped.emplace_back(static_cast<std::uint32_t>(bases[0] + v * stride), e);
        for (const auto& [rest, rc] : child) {
          Entries key = mapped;
          key.insert(key.end(), rest.begin(), rest.end());
          auto tkey = CompositionTensor::from_entries(q, g, std::move(key));
          CycQ c = lc * rc;
          auto [it, ins] = partial[chunk].try_emplace(std::move(tkey), c);
          if (!ins) it->second += c;
        }
      }
    }
  });
  return collect(p, partial);
}

Enumerator merge_axis(const Enumerator& p, std::uint32_t axis) {
  if (p.fold() < 2) throw PreconditionError("merging needs at least two axes");
  if (axis < 1 || axis > p.fold()) throw PreconditionError("axis out of range");
  Enumerator out(p.ring(), p.fold() - 1, p.length());
  for (const auto& [k, c] : p.terms()) out.add_term(marginalize(k, axis), c);
  return out;
}

Enumerator permute_axes(const Enumerator& p, std::span<const std::uint32_t> perm) {
  const std::uint32_t g = p.fold(), q = p.ring().size();
  if (perm.size() != g) throw PreconditionError("axis permutation has the wrong size");
  std::vector<bool> seen(g, false);
  for (auto a : perm) {
    if (a >= g || seen[a]) throw PreconditionError("invalid axis permutation");
    seen[a] = true;
  }
  Enumerator out(p.ring(), g, p.length());
  for (const auto& [k, c] : p.terms()) {
    std::vector<CompositionTensor::Entry> entries;
    for (const auto& [idx, e] : k.entries()) {
      auto a = unflatten_index(idx, q, g);
      std::vector<Symbol> b(g);
      for (std::uint32_t i = 0; i < g; ++i) b[i] = a[perm[i]];
      entries.emplace_back(flatten_index(b, q), e);
    }
    out.add_term(CompositionTensor::from_entries(q, g, std::move(entries)), c);
  }
  return out;
}

}  // namespace cjwe
