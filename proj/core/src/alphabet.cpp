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

#include "cjwe/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cjwe/error.hpp"

namespace cjwe {

namespace {

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t f;
  std::vector<std::uint32_t> coeffs;
};

const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
#include "conway_table.inc"
  };
  return table;
}

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kMaxTabulated = 1u << 10;

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<std::uint32_t>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Polynomials over F_p as coefficient vectors, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) return 0;
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

void validate_poly_shape(std::uint32_t p, std::uint32_t f, const std::vector<std::uint32_t>& poly) {
  if (poly.size() != f + 1) {
    throw PreconditionError("defining polynomial must have degree " + std::to_string(f));
  }
  if (poly.back() != 1) throw PreconditionError("defining polynomial must be monic");
  for (auto c : poly)
    if (c >= p) throw PreconditionError("defining polynomial coefficients must be residues mod p");
}

}  // namespace

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t f) {
  for (const auto& e : conway_table())
    if (e.p == p && e.f == f) return e.coeffs;
  return std::nullopt;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly m = poly;
  trim(m);
  if (m.size() < 2) return false;
  std::size_t f = m.size() - 1;
  if (f == 1) return true;
  // Rabin-style: no common factor with x^(p^i) - x for i <= f/2.
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= f / 2; ++i) {
    xp = poly_powmod(xp, p, m, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

bool is_primitive(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (!is_irreducible(p, poly)) return false;
  Poly m = poly;
  trim(m);
  std::size_t f = m.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < f; ++i) order *= p;
  order -= 1;
  if (f == 1) {
    // Root r = -c0 / c1 must generate F_p^*.
    std::uint64_t r = static_cast<std::uint64_t>(p - m[0] % p) % p * inv_mod(m[1], p) % p;
    if (r == 0) return false;
    for (auto q : prime_factors(order)) {
      std::uint64_t acc = 1, b = r, e = order / q;
      while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  }
  Poly x{0, 1};
  if (poly_powmod(x, order, m, p) != Poly{1}) return false;
  for (auto q : prime_factors(order)) {
    if (poly_powmod(x, order / q, m, p) == Poly{1}) return false;
  }
  return true;
}

struct RingSpec::Impl {
  RingKind kind;
  std::uint32_t p = 0;  // characteristic for fields, k for residue rings
  std::uint32_t f = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> poly;
  bool default_poly = true;

  bool full_tables = false;
  std::vector<Symbol> add_t, mul_t;
  std::vector<Symbol> neg_t, inv_t, conj_t;
  std::vector<std::uint8_t> unit_t;
  std::vector<std::uint32_t> exp_t, log_t;  // fields: powers of the root of poly
  std::vector<std::uint32_t> pow_p;

  Symbol add_raw(Symbol a, Symbol b) const {
    if (kind == RingKind::IntegerResidue) return static_cast<Symbol>((a + b) % q);
    if (p == 2) return static_cast<Symbol>(a ^ b);
    std::uint32_t out = 0, x = a, y = b;
    for (std::uint32_t i = 0; i < f; ++i) {
      out += ((x % p + y % p) % p) * pow_p[i];
      x /= p;
      y /= p;
    }
    return static_cast<Symbol>(out);
  }

  Symbol mul_raw(Symbol a, Symbol b) const {
    if (kind == RingKind::IntegerResidue) {
      return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % q);
    }
    if (a == 0 || b == 0) return 0;
    return static_cast<Symbol>(exp_t[(log_t[a] + log_t[b]) % (q - 1)]);
  }

  Symbol neg_raw(Symbol a) const {
    if (kind == RingKind::IntegerResidue) return static_cast<Symbol>((q - a) % q);
    std::uint32_t out = 0, x = a;
    for (std::uint32_t i = 0; i < f; ++i) {
      out += ((p - x % p) % p) * pow_p[i];
      x /= p;
    }
    return static_cast<Symbol>(out);
  }
};

RingSpec RingSpec::make(RingKind kind, std::uint32_t order, std::optional<std::vector<std::uint32_t>> poly) {
  return kind == RingKind::FiniteField ? field(order, std::move(poly)) : residue(order);
}

RingSpec RingSpec::residue(std::uint32_t k) {
  if (k < 2) throw PreconditionError("Z_k requires k >= 2");
  if (k > kMaxOrder) throw PreconditionError("Z_k requires k <= 65536");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::IntegerResidue;
  impl->p = k;
  impl->q = k;
  impl->pow_p = {1};
  impl->neg_t.resize(k);
  impl->inv_t.resize(k);
  impl->unit_t.resize(k);
  impl->conj_t.resize(k);
  for (std::uint32_t a = 0; a < k; ++a) {
    impl->neg_t[a] = impl->neg_raw(static_cast<Symbol>(a));
    std::uint32_t inv = std::gcd(a, k) == 1 ? inv_mod(a, k) : 0;
    impl->unit_t[a] = std::gcd(a, k) == 1 ? 1 : 0;
    impl->inv_t[a] = static_cast<Symbol>(inv);
    impl->conj_t[a] = static_cast<Symbol>(a);
  }
  if (k <= kMaxTabulated) {
    impl->full_tables = true;
    impl->add_t.resize(static_cast<std::size_t>(k) * k);
    impl->mul_t.resize(static_cast<std::size_t>(k) * k);
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t b = 0; b < k; ++b) {
        impl->add_t[a * k + b] = impl->add_raw(static_cast<Symbol>(a), static_cast<Symbol>(b));
        impl->mul_t[a * k + b] = impl->mul_raw(static_cast<Symbol>(a), static_cast<Symbol>(b));
      }
  }
  return RingSpec(std::move(impl));
}

RingSpec RingSpec::field(std::uint32_t q, std::optional<std::vector<std::uint32_t>> poly) {
  if (q < 2 || q > kMaxOrder) throw PreconditionError("field order must be in [2, 65536]");
  auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw PreconditionError(std::to_string(q) + " is not a prime power");
  }
  std::uint32_t p = factors[0];
  std::uint32_t f = 0;
  for (std::uint32_t t = q; t > 1; t /= p) ++f;

  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::FiniteField;
  impl->p = p;
  impl->f = f;
  impl->q = q;
  impl->pow_p.resize(f);
  for (std::uint32_t i = 0, v = 1; i < f; ++i, v *= p) impl->pow_p[i] = v;

  if (poly) {
    validate_poly_shape(p, f, *poly);
    if (!is_irreducible(p, *poly)) throw PreconditionError("defining polynomial is reducible");
    if (!is_primitive(p, *poly)) throw PreconditionError("defining polynomial is not primitive");
    impl->poly = *poly;
    impl->default_poly = false;
  }
  if (f == 1) {
    // Any root generates the additive structure; multiplication is mod p.
    std::uint32_t g = 1;
    if (p > 2) {
      auto pf = prime_factors(p - 1);
      for (g = 2; g < p; ++g) {
        bool ok = true;
        for (auto r : pf) {
          std::uint64_t acc = 1, b = g, e = (p - 1) / r;
          while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
          }
          if (acc == 1) ok = false;
        }
        if (ok) break;
      }
    }
    if (impl->default_poly) impl->poly = {(p - g) % p, 1};
  } else if (impl->default_poly) {
    auto conway = conway_polynomial(p, f);
    if (!conway) {
      throw PreconditionError("no built-in Conway polynomial for q = " + std::to_string(q) +
                              "; supply a primitive defining polynomial");
    }
    impl->poly = *conway;
  }

  // Powers of the root: exp_t[j] = index of root^j.
  impl->exp_t.resize(q - 1);
  impl->log_t.assign(q, 0);
  if (f == 1) {
    std::uint32_t root = (p - impl->poly[0]) % p;
    if (p == 2) root = 1;
    std::uint64_t v = 1;
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
      impl->exp_t[j] = static_cast<std::uint32_t>(v);
      v = v * root % p;
    }
  } else {
    std::vector<std::uint32_t> digits(f, 0);
    digits[0] = 1;
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
      std::uint32_t idx = 0;
      for (std::uint32_t i = 0; i < f; ++i) idx += digits[i] * impl->pow_p[i];
      impl->exp_t[j] = idx;
      // Multiply by the root: shift and reduce with x^f = -(c_0 + ... + c_{f-1} x^{f-1}).
      std::uint32_t top = digits[f - 1];
      for (std::uint32_t i = f - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      for (std::uint32_t i = 0; i < f; ++i) {
        digits[i] = (digits[i] + (p - top) * impl->poly[i]) % p;
      }
    }
  }
  for (std::uint32_t j = 0; j + 1 < q; ++j) impl->log_t[impl->exp_t[j]] = j;

  impl->neg_t.resize(q);
  impl->inv_t.resize(q);
  impl->unit_t.resize(q);
  impl->conj_t.resize(q);
  std::uint64_t conj_exp = 0;
  if (f % 2 == 0) {
    conj_exp = 1;
    for (std::uint32_t i = 0; i < f / 2; ++i) conj_exp *= p;
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    impl->neg_t[a] = impl->neg_raw(static_cast<Symbol>(a));
    impl->unit_t[a] = a != 0;
    impl->inv_t[a] = a == 0 ? 0 : static_cast<Symbol>(impl->exp_t[(q - 1 - impl->log_t[a]) % (q - 1)]);
    if (f % 2 == 0) {
      impl->conj_t[a] = a == 0 ? 0 : static_cast<Symbol>(impl->exp_t[impl->log_t[a] * conj_exp % (q - 1)]);
    }
  }
  if (q <= kMaxTabulated) {
    impl->full_tables = true;
    impl->add_t.resize(static_cast<std::size_t>(q) * q);
    impl->mul_t.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_t[a * q + b] = impl->add_raw(static_cast<Symbol>(a), static_cast<Symbol>(b));
        impl->mul_t[a * q + b] = impl->mul_raw(static_cast<Symbol>(a), static_cast<Symbol>(b));
      }
  }
  return RingSpec(std::move(impl));
}

RingSpec RingSpec::parse(std::string_view literal) {
  std::istringstream is{std::string(literal)};
  std::string kind;
  std::string order_text;
  if (!(is >> kind >> order_text)) throw ParseError("ring literal must be 'F <q> [poly ...]' or 'Z <k>'");
  std::uint64_t order = 0;
  try {
    std::size_t used = 0;
    order = std::stoull(order_text, &used);
    if (used != order_text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad ring order '" + order_text + "'");
  }
  if (order > kMaxOrder) throw PreconditionError("ring order exceeds 65536");
  std::optional<std::vector<std::uint32_t>> poly;
  std::string word;
  if (is >> word) {
    if (kind != "F" || word != "poly") throw ParseError("unexpected '" + word + "' in ring literal");
    std::string list, rest;
    while (is >> rest) list += rest;
    if (list.empty()) throw ParseError("'poly' needs a coefficient list");
    std::vector<std::uint32_t> coeffs;
    std::stringstream ls(list);
    std::string item;
    while (std::getline(ls, item, ',')) {
      try {
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument("trailing");
        coeffs.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw ParseError("bad polynomial coefficient '" + item + "'");
      }
    }
    poly = std::move(coeffs);
  }
  if (kind == "F") return field(static_cast<std::uint32_t>(order), std::move(poly));
  if (kind == "Z") return residue(static_cast<std::uint32_t>(order));
  throw ParseError("unknown ring kind '" + kind + "'");
}

std::string RingSpec::literal() const {
  std::ostringstream os;
  os << (is_field() ? "F " : "Z ") << impl_->q;
  if (is_field() && !impl_->default_poly) {
    os << " poly ";
    for (std::size_t i = 0; i < impl_->poly.size(); ++i) os << (i ? "," : "") << impl_->poly[i];
  }
  return os.str();
}

RingKind RingSpec::kind() const { return impl_->kind; }
std::uint32_t RingSpec::size() const { return impl_->q; }
std::uint32_t RingSpec::characteristic() const { return impl_->p; }
std::uint32_t RingSpec::degree() const { return impl_->f; }
const std::vector<std::uint32_t>& RingSpec::defining_poly() const { return impl_->poly; }

Symbol RingSpec::add(Symbol a, Symbol b) const {
  return impl_->full_tables ? impl_->add_t[a * impl_->q + b] : impl_->add_raw(a, b);
}

Symbol RingSpec::sub(Symbol a, Symbol b) const { return add(a, impl_->neg_t[b]); }

Symbol RingSpec::mul(Symbol a, Symbol b) const {
  return impl_->full_tables ? impl_->mul_t[a * impl_->q + b] : impl_->mul_raw(a, b);
}

Symbol RingSpec::neg(Symbol a) const { return impl_->neg_t[a]; }

bool RingSpec::is_unit(Symbol a) const { return impl_->unit_t[a] != 0; }

Symbol RingSpec::inv(Symbol a) const {
  if (!is_unit(a)) throw PreconditionError("element " + std::to_string(a) + " is not a unit");
  return impl_->inv_t[a];
}

bool RingSpec::has_conj() const { return is_field() && impl_->f % 2 == 0; }

Symbol RingSpec::conj(Symbol a) const {
  if (!has_conj()) throw PreconditionError("conjugation needs a field of even degree");
  return impl_->conj_t[a];
}

std::uint32_t RingSpec::additive_order(Symbol a) const {
  if (a == 0) return 1;
  if (is_field()) return impl_->p;
  return impl_->q / std::gcd<std::uint32_t>(a, impl_->q);
}

std::uint32_t RingSpec::digit(Symbol a, std::uint32_t i) const {
  if (!is_field()) return i == 0 ? a : 0;
  if (i >= impl_->f) return 0;
  return a / impl_->pow_p[i] % impl_->p;
}

std::uint32_t RingSpec::chi_conductor() const { return impl_->p; }

std::uint32_t RingSpec::chi_exponent(Symbol a) const { return is_field() ? a % impl_->p : a; }

CycQ RingSpec::chi(Symbol a) const { return CycQ::zeta_pow(chi_conductor(), chi_exponent(a)); }

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->q == b.impl_->q && a.impl_->poly == b.impl_->poly;
}

Element::Element(RingSpec ring, Symbol idx) : ring_(std::move(ring)), idx_(idx) {
  if (idx_ >= ring_.size()) throw PreconditionError("element index out of range");
}

void Element::require_same(const Element& o) const {
  if (!(ring_ == o.ring_)) throw PreconditionError("elements belong to different rings");
}

Element Element::operator+(const Element& o) const {
  require_same(o);
  return {ring_, ring_.add(idx_, o.idx_)};
}

Element Element::operator-(const Element& o) const {
  require_same(o);
  return {ring_, ring_.sub(idx_, o.idx_)};
}

Element Element::operator*(const Element& o) const {
  require_same(o);
  return {ring_, ring_.mul(idx_, o.idx_)};
}

Element Element::operator-() const { return {ring_, ring_.neg(idx_)}; }
Element Element::inv() const { return {ring_, ring_.inv(idx_)}; }
Element Element::conj() const { return {ring_, ring_.conj(idx_)}; }

Element omega(const RingSpec& ring, std::uint32_t i) {
  if (i >= ring.size()) throw PreconditionError("index " + std::to_string(i) + " out of range");
  return {ring, static_cast<Symbol>(i)};
}

}  // namespace cjwe
