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

#include "cjwe/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "cjwe/error.hpp"

namespace cjwe {

namespace {

std::mutex g_phi_mutex;
std::map<std::uint32_t, std::vector<std::int64_t>> g_phi_cache;

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      std::int64_t c = poly[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw PreconditionError("cyclotomic conductor must be positive");
  {
    std::lock_guard lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);
  std::lock_guard lock(g_phi_mutex);
  return g_phi_cache.emplace(m, std::move(poly)).first->second;
}

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t result = m;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycQ::CycQ() : m_(1), c_(1) {}

CycQ::CycQ(const Rational& r) : m_(1), c_{r} {}

CycQ::CycQ(long v) : m_(1), c_{Rational(v)} {}

void CycQ::reduce_from(std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(m_);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
  }
  poly.resize(deg);
  c_ = std::move(poly);
}

CycQ CycQ::from_poly(std::uint32_t m, std::span<const Rational> coeffs) {
  CycQ out;
  out.m_ = m;
  std::vector<Rational> poly(coeffs.begin(), coeffs.end());
  if (poly.size() < euler_phi(m)) poly.resize(euler_phi(m));
  out.reduce_from(std::move(poly));
  return out;
}

CycQ CycQ::zeta_pow(std::uint32_t m, std::int64_t e) {
  if (m == 0) throw PreconditionError("cyclotomic conductor must be positive");
  std::int64_t r = e % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  std::vector<Rational> poly(std::max<std::size_t>(r + 1, euler_phi(m)));
  poly[r] = 1;
  CycQ out;
  out.m_ = m;
  out.reduce_from(std::move(poly));
  return out;
}

bool CycQ::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycQ::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycQ::to_rational() const {
  if (!is_rational()) throw NotRational("cyclotomic value " + to_string() + " is not rational");
  return c_[0];
}

CycQ CycQ::embed(std::uint32_t M) const {
  if (M == 0 || M % m_ != 0) throw PreconditionError("embedding conductor must be a multiple");
  if (M == m_) return *this;
  CycQ out;
  out.m_ = M;
  if (is_rational()) {
    out.c_.assign(euler_phi(M), Rational(0));
    out.c_[0] = c_[0];
    return out;
  }
  std::uint32_t step = M / m_;
  std::vector<Rational> poly(std::max<std::size_t>((c_.size() - 1) * step + 1, euler_phi(M)));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  out.reduce_from(std::move(poly));
  return out;
}

std::optional<CycQ> CycQ::restrict_to(std::uint32_t m) const {
  if (m == 0 || m_ % m != 0) throw PreconditionError("restriction conductor must divide the conductor");
  if (m == m_) return *this;
  if (is_rational()) {
    CycQ out;
    out.m_ = m;
    out.c_.assign(euler_phi(m), Rational(0));
    out.c_[0] = c_[0];
    return out;
  }
  // Solve sum_i y_i embed(zeta_m^i) = *this over Q.
  std::size_t rows = c_.size();
  std::size_t cols = euler_phi(m);
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < cols; ++i) {
    CycQ basis = zeta_pow(m, static_cast<std::int64_t>(i)).embed(m_);
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = basis.c_[r];
  }
  for (std::size_t r = 0; r < rows; ++r) a[r][cols] = c_[r];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = col; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  CycQ out;
  out.m_ = m;
  out.c_.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out.c_[pivot_col[r]] = a[r][cols];
  return out;
}

CycQ CycQ::conj() const {
  if (is_rational()) return *this;
  std::vector<Rational> poly(m_);
  poly[0] = c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) poly[m_ - i] = c_[i];
  CycQ out;
  out.m_ = m_;
  out.reduce_from(std::move(poly));
  return out;
}

std::complex<double> CycQ::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double angle = 2 * std::numbers::pi * static_cast<double>(i) / m_;
    z += c_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

namespace {

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

CycQ& CycQ::operator+=(const CycQ& o) {
  if (o.m_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (m_ != o.m_) {
    std::uint32_t M = lcm32(m_, o.m_);
    *this = embed(M);
    if (o.m_ != M) return *this += o.embed(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycQ& CycQ::operator-=(const CycQ& o) { return *this += -o; }

CycQ CycQ::operator-() const {
  CycQ out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycQ& CycQ::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

CycQ& CycQ::operator*=(const CycQ& o) {
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rational r = c_[0];
    *this = o;
    return *this *= r;
  }
  if (m_ != o.m_) {
    std::uint32_t M = lcm32(m_, o.m_);
    CycQ a = embed(M);
    CycQ b = o.embed(M);
    *this = std::move(a);
    return *this *= b;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_from(std::move(prod));
  return *this;
}

bool operator==(const CycQ& a, const CycQ& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  std::uint32_t M = std::lcm(a.m_, b.m_);
  return a.embed(M).c_ == b.embed(M).c_;
}

CycQ CycQ::canonical() const {
  if (is_rational()) return CycQ(c_[0]);
  for (std::uint32_t d = 1; d < m_; ++d) {
    if (m_ % d != 0) continue;
    if (auto r = restrict_to(d)) return *r;
  }
  return *this;
}

std::string CycQ::to_string() const {
  if (is_rational()) return cjwe::to_string(c_[0]);
  if (auto c = canonical(); c.m_ != m_) return c.to_string();
  std::ostringstream os;
  os << "{\"m\":" << m_ << ",\"coeffs\":[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << '"' << cjwe::to_string(c_[i]) << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace cjwe
