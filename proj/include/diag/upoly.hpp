// Copyright 2026 The Diagonals Authors
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


#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diag/errors.hpp"
#include "diag/rational.hpp"

namespace diag {

// Dense univariate polynomial over a field F; c[i] is the coefficient of t^i.
// Trailing zeros are never stored.
template <class F>
class Poly {
 public:
  std::vector<F> c;

  Poly() = default;
  explicit Poly(const F& a) {
    if (!(a == F(0))) c.push_back(a);
  }
  explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly monomial(const F& a, std::size_t k) {
    Poly p;
    if (a == F(0)) return p;
    p.c.assign(k + 1, F(0));
    p.c[k] = a;
    return p;
  }
  // t + h
  static Poly linear(const F& h) { return Poly(std::vector<F>{h, F(1)}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const F& lead() const { return c.back(); }
  F coeff(std::size_t i) const { return i < c.size() ? c[i] : F(0); }

  void trim() {
    while (!c.empty() && c.back() == F(0)) c.pop_back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F(0) - x;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == F(0)) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const F& s) {
    if (s == F(0)) return Poly();
    Poly r = a;
    for (auto& x : r.c) x = x * s;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  // Euclidean division.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw AlgorithmError("polynomial division by zero");
    Poly q, r = a;
    if (a.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
    F inv = F(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      F f = r.lead() * inv;
      q.c[shift] = f;
      for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] = r.c[i + shift] - f * b.c[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (F(1) / lead());
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  F eval(const F& x) const {
    F acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  // p(t + h)
  Poly shift(const F& h) const {
    Poly acc;
    Poly lin = linear(h);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * lin + Poly(c[i]);
    return acc;
  }
};

using QPoly = Poly<Rational>;

// Element of Q(n): num/den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() = default;
  RatFun(long v) : num_(Rational(v)) {}  // NOLINT: implicit for Poly<RatFun> literals
  RatFun(const Rational& v) : num_(v) {}  // NOLINT
  explicit RatFun(QPoly num) : num_(std::move(num)) {}
  RatFun(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const { return num_.coeff(0); }
  Rational eval(const Rational& n) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "n") const;

 private:
  QPoly num_;
  QPoly den_ = QPoly(Rational(1));
};

std::string to_string(const QPoly& p, const std::string& var);

// Basis of the right nullspace of an m x n matrix over a field.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, std::size_t ncols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == F(0)) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    F inv = F(1) / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == F(0)) continue;
      F f = m[r][col];
      for (std::size_t j = col; j < ncols; ++j) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = F(0) - m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace diag
