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
#include <vector>

#include "diag/upoly.hpp"

namespace diag::detail {

inline bool is_nonneg_integer(const Rational& q) { return is_integer(q) && q >= 0; }
inline bool is_nonneg_integer(const RatFun& q) {
  return q.is_constant() && is_nonneg_integer(q.constant_value());
}
inline long to_long(const Rational& q) { return q.get_num().get_si(); }
inline long to_long(const RatFun& q) { return to_long(q.constant_value()); }

template <class F>
struct GosperSolution {
  std::vector<F> sigma;
  Poly<F> x;
};

// Solves a(k) x(k+1) - bm1(k) x(k) = sum_i sigma_i rhs_i(k) for a polynomial x
// and constants sigma, not all zero. Degree bound per Gosper; on a
// leading-coefficient tie the larger candidate wins.
template <class F>
std::optional<GosperSolution<F>> solve_gosper(const Poly<F>& a, const Poly<F>& bm1, const std::vector<Poly<F>>& rhs) {
  int da = a.degree(), db = bm1.degree();
  int drhs = -1;
  for (const auto& r : rhs) drhs = std::max(drhs, r.degree());
  long D;
  if (da != db || !(a.lead() == bm1.lead())) {
    D = drhs - std::max(da, db);
  } else {
    D = drhs - da + 1;
    if (da >= 1) {
      F cand = (bm1.coeff(static_cast<std::size_t>(da - 1)) - a.coeff(static_cast<std::size_t>(da - 1))) / a.lead();
      if (is_nonneg_integer(cand)) D = std::max(D, to_long(cand));
    }
  }
  std::size_t nx = D >= 0 ? static_cast<std::size_t>(D + 1) : 0;
  std::size_t ncols = nx + rhs.size();
  std::vector<Poly<F>> cols;
  Poly<F> kpow(F(1)), kpow1(F(1));
  Poly<F> kvar = Poly<F>::monomial(F(1), 1), kp1 = Poly<F>::linear(F(1));
  for (std::size_t j = 0; j < nx; ++j) {
    cols.push_back(a * kpow1 - bm1 * kpow);
    kpow = kpow * kvar;
    kpow1 = kpow1 * kp1;
  }
  for (const auto& r : rhs) cols.push_back(-r);
  int rows = -1;
  for (const auto& c : cols) rows = std::max(rows, c.degree());
  std::vector<std::vector<F>> m(static_cast<std::size_t>(rows + 1), std::vector<F>(ncols, F(0)));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < cols[j].c.size(); ++i) m[i][j] = cols[j].c[i];
  auto basis = nullspace(std::move(m), ncols);
  for (const auto& v : basis) {
    bool has_sigma = false;
    for (std::size_t i = nx; i < ncols; ++i) has_sigma = has_sigma || !(v[i] == F(0));
    if (!has_sigma) continue;
    GosperSolution<F> s;
    s.x = Poly<F>(std::vector<F>(v.begin(), v.begin() + static_cast<long>(nx)));
    s.sigma.assign(v.begin() + static_cast<long>(nx), v.end());
    return s;
  }
  return std::nullopt;
}

}  // namespace diag::detail
