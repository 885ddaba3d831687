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

// Reference computations written directly from the definitions, sharing no
// code with the library beyond the GMP number types.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Q poch(const Q& a, unsigned long n) {
  Q r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= a + Q(static_cast<long>(i));
  return r;
}

inline Z fact(unsigned long n) {
  Z r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Z choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Generalized binomial (alpha choose m) for rational alpha.
inline Q gbinom(const Q& alpha, unsigned long m) {
  Q r = 1;
  for (unsigned long i = 0; i < m; ++i) r *= (alpha - Q(static_cast<long>(i))) / Q(static_cast<long>(i + 1));
  return r;
}

inline Q qpow(const Q& b, unsigned long e) {
  Q r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

// n-th coefficient of pFq(upper; lower; scale * x).
inline Q hyp_coeff(const std::vector<Q>& upper, const std::vector<Q>& lower, const Q& scale, unsigned long n) {
  Q num = qpow(scale, n), den = 1;
  for (const auto& a : upper) num *= poch(a, n);
  for (const auto& b : lower) den *= poch(b, n);
  den *= Q(fact(n));
  return num / den;
}

// Coefficient of x^n y^n z^n in (1-x-y)^alpha / (1-x-y-z), by summing over the
// power of (x+y) drawn from the numerator: (-1)^m C(alpha,m) times the
// coefficient of x^n y^n z^n in (x+y)^m / (1-(x+y)-z).
inline Q diag_family_coeff(const Q& alpha, unsigned long n) {
  Q total = 0;
  for (unsigned long m = 0; m <= 2 * n; ++m) {
    // (x+y)^m * (x+y)^j z^n with j + m = 2n; multinomial weight C(j+n, n).
    unsigned long j = 2 * n - m;
    Q term = gbinom(alpha, m) * Q(choose(static_cast<long>(j + n), static_cast<long>(n))) *
             Q(choose(static_cast<long>(2 * n), static_cast<long>(n)));
    total += (m % 2 ? -term : term);
  }
  return total;
}

// Composition f(g(x)) mod x^{n}, summing f_k g^k with explicit powers.
inline std::vector<Q> compose_naive(const std::vector<Q>& f, const std::vector<Q>& g, std::size_t n) {
  std::vector<Q> out(n, 0), gk(n, 0);
  gk[0] = 1;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) out[i] += f[k] * gk[i];
    std::vector<Q> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n && j < g.size(); ++j) next[i + j] += gk[i] * g[j];
    gk = next;
  }
  return out;
}

inline Q random_rational(std::mt19937_64& rng, long span = 5, long dmax = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, dmax);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
