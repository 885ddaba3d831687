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

#include "diag/hypergeom.hpp"
#include "diag/mpoly.hpp"
#include "diag/rational.hpp"
#include "diag/upoly.hpp"

namespace diag {

// cn*n + ck*k + c0
struct LinearForm {
  Rational cn, ck, c0;
  Rational eval(const Rational& n, const Rational& k) const { return cn * n + ck * k + c0; }
  LinearForm shift_n(long j) const { return {cn, ck, c0 + cn * j}; }
  LinearForm shift_k(long j) const { return {cn, ck, c0 + ck * j}; }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.cn == b.cn && a.ck == b.ck && a.c0 == b.c0;
  }
  friend bool operator<(const LinearForm& a, const LinearForm& b);
};

// Gamma(alpha*n + beta*k + gamma)^power with integer alpha, beta.
struct GammaFactor {
  long alpha = 0;
  long beta = 0;
  Rational gamma;
  int power = 1;
};

// A ratio of products of linear forms times a constant.
struct FactoredRatio {
  Rational constant = 1;
  std::vector<LinearForm> num, den;
  Rational eval(const Rational& n, const Rational& k) const;  // throws on a zero denominator
  MPoly num_poly() const;                                     // over (n, k)
  MPoly den_poly() const;
};

// Proper hypergeometric term constant * kb^k * nb^n * prod Gamma(...)^power.
// Both shift ratios are derived from the factors. Terms whose Gamma
// denominator hits a pole are zero; the summation range is k_lo..k_hi(n).
struct HyperTerm {
  Rational constant = 1;
  Rational k_base = 1;
  Rational n_base = 1;
  std::vector<GammaFactor> factors;
  long k_lo = 0;
  long k_hi_n = 4;
  long k_hi_c = 4;

  Rational evaluate(long n, long k) const;
  Rational sum(long n) const;
  FactoredRatio k_ratio() const;  // t(n,k+1)/t(n,k)
  FactoredRatio n_ratio() const;  // t(n+1,k)/t(n,k)
  std::string to_string() const;

  HyperTerm& times(const HyperTerm& other);
  // (top choose bottom) with top, bottom given as GammaFactor arguments.
  static HyperTerm binomial(long tn, long tk, const Rational& tc, long bn, long bk, const Rational& bc);
  // (x)_k / k! with x rational.
  static HyperTerm pochhammer_over_factorial(const Rational& x);
};

HyperTerm binomial_term();          // (n choose k)
HyperTerm binomial_squared_term();  // (n choose k)^2
// (2n choose n) * ((-a/b)_k / k!) * (3n-k choose 2n-k)
HyperTerm family_summand(long a, long b);
// Parses a product of factors: binomial(L,L), poch(q,k), fact(L), gamma(L),
// q^k, q^n, a rational constant; each optionally raised to ^-1 or ^m.
HyperTerm parse_hyperterm(const std::string& text);

// R(n,k) = num/den over variables (n, k).
struct Certificate {
  MPoly num, den;
  Rational eval(const Rational& n, const Rational& k) const;  // throws on a pole
  std::string to_string() const;
};

// Gosper on t(k+1)/t(k) = num/den over Q[k].
struct GosperResult {
  bool found = false;
  QPoly r_num, r_den;  // R(k) = r_num/r_den when found
  Rational eval(const Rational& k) const;
};
GosperResult gosper(const QPoly& ratio_num, const QPoly& ratio_den);

struct ZeilbergerResult {
  Recurrence rec;  // Q[i] over variable n multiplies S(n+i)
  Certificate cert;
};
// Throws AlgorithmError("OrderExceeded ...") when no recurrence of order <= maxOrder exists.
ZeilbergerResult zeilberger(const HyperTerm& term, std::size_t max_order = 4);

struct GridPoint {
  long n, k;
};
// Exact telescoping identity at every grid point, then the recurrence on
// brute-force sums for n in 0..n_max. Throws AlgorithmError("PoleOnGrid ...").
bool certificate_verify(const HyperTerm& term, const Recurrence& rec, const Certificate& cert,
                        const std::vector<GridPoint>& grid, long n_max);
// Integer points with n in 0..n_max, k in -2..k_max where no denominator vanishes.
std::vector<GridPoint> default_grid(const HyperTerm& term, const Recurrence& rec, const Certificate& cert,
                                    long n_max, long k_max);

}  // namespace diag
