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


#include "diag/errors.hpp"
#include "diag/zeilberger.hpp"
#include "solve.hpp"

namespace diag {

namespace {

// 1 + max |c_i / lead|, an upper bound on the absolute value of every root.
Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, Rational(abs(p.c[i] / p.lead())));
  return m + 1;
}

constexpr long kMaxDispersion = 1L << 20;

long to_long_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

}  // namespace

Rational GosperResult::eval(const Rational& k) const {
  Rational d = r_den.eval(k);
  if (d == 0) throw AlgorithmError("PoleOnGrid: certificate pole at k=" + to_string(k));
  return r_num.eval(k) / d;
}

GosperResult gosper(const QPoly& ratio_num, const QPoly& ratio_den) {
  if (ratio_den.is_zero()) throw ValidationError(ValidationError::Kind::bad_argument, "ratio has zero denominator");
  GosperResult res;
  if (ratio_num.is_zero()) return res;
  // Gosper-Petkovsek form: ratio = a(k)/b(k) * c(k+1)/c(k).
  QPoly a = ratio_num, b = ratio_den, c(Rational(1));
  Rational bound = cauchy_bound(a) + cauchy_bound(b);
  if (bound > kMaxDispersion) throw ResourceError("dispersion bound too large for Gosper");
  long H = to_long_floor(bound);
  for (long h = 0; h <= H; ++h) {
    while (true) {
      QPoly g = QPoly::gcd(a, b.shift(Rational(h)));
      if (g.degree() <= 0) break;
      a = QPoly::divmod(a, g).first;
      QPoly gs = g.shift(Rational(-h));
      b = QPoly::divmod(b, gs).first;
      for (long j = 1; j <= h; ++j) c = c * g.shift(Rational(-j));
    }
  }
  QPoly bm1 = b.shift(Rational(-1));
  auto sol = detail::solve_gosper<Rational>(a, bm1, {c});
  if (!sol) return res;
  Rational s = sol->sigma[0];
  QPoly x = sol->x * Rational(1 / s);
  // R = b(k-1) x(k) / c(k), reduced.
  QPoly num = bm1 * x, den = c;
  if (num.is_zero()) {
    res.found = true;
    res.r_num = num;
    res.r_den = QPoly(Rational(1));
    return res;
  }
  QPoly g = QPoly::gcd(num, den);
  num = QPoly::divmod(num, g).first;
  den = QPoly::divmod(den, g).first;
  Rational l = den.lead();
  res.found = true;
  res.r_num = num * Rational(1 / l);
  res.r_den = den * Rational(1 / l);
  return res;
}

}  // namespace diag
