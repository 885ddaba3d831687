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


#include <algorithm>
#include <sstream>

#include "diag/errors.hpp"
#include "diag/kernels.hpp"
#include "diag/modp.hpp"

namespace diag {

namespace {

using VK = ValidationError::Kind;

std::uint64_t prime_power(std::uint64_t p, unsigned r) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (m > (std::uint64_t{1} << 62) / p) throw ResourceError("p^r does not fit in 62 bits");
    m *= p;
  }
  return m;
}

std::int64_t small(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()) || abs(z) > (Integer(1) << 40))
    throw ValidationError(VK::bad_argument, "parameter too large for the mod-p recurrence: " + to_string(z));
  return z.get_si();
}

// alpha + n * beta for a parameter alpha/beta.
struct LinearParam {
  std::int64_t alpha, beta;
};

void require_same_ring(const ModPSeries& a, const ModPSeries& b) {
  if (a.p != b.p || a.r != b.r) throw ValidationError(VK::bad_argument, "series over different rings");
}

std::size_t nonzeros(const ModPSeries& a) {
  return static_cast<std::size_t>(std::count_if(a.c.begin(), a.c.end(), [](std::uint64_t v) { return v != 0; }));
}

}  // namespace

std::uint64_t ModPSeries::modulus() const { return prime_power(p, r); }

std::vector<std::size_t> ModPSeries::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) s.push_back(i);
  return s;
}

ModPSeries hyp_series_mod(const HypergeomSpec& spec, std::uint64_t p, unsigned r, std::size_t N, unsigned K) {
  check_spec(spec);
  if (r == 0) throw ValidationError(VK::bad_argument, "r must be positive");
  PadicContext ctx = padic_context(p, K);
  if (r > ctx.K)
    throw ResourceError("PrecisionExhausted: p^" + std::to_string(r) + " exceeds the working precision p^" +
                        std::to_string(ctx.K));
  ModPSeries out;
  out.p = p;
  out.r = r;
  out.c.assign(N + 1, 0);
  std::vector<LinearParam> up, down;
  Rational constant = spec.scale;
  for (const auto& a : spec.upper) {
    up.push_back({small(a.get_num()), small(a.get_den())});
    constant /= a.get_den();
  }
  for (const auto& b : spec.lower) {
    down.push_back({small(b.get_num()), small(b.get_den())});
    constant *= b.get_den();
  }
  down.push_back({1, 1});  // n!
  if (spec.scale == 0) {
    out.c[0] = 1 % out.modulus();
    return out;
  }
  const PadicCoeff C = padic_from_rational(ctx, constant);
  PadicCoeff cur;  // c_0 = 1
  out.c[0] = padic_reduce(ctx, cur, r);
  bool terminated = false;
  for (std::size_t n = 0; n < N; ++n) {
    if (terminated) break;
    const auto nn = static_cast<std::int64_t>(n);
    long e = cur.e + C.e;
    std::uint64_t num = mulmod(cur.u, C.u, ctx.M), den = 1;
    for (const auto& a : up) {
      PadicCoeff f = padic_from_integer(ctx, a.alpha + nn * a.beta);
      if (f.zero) {
        terminated = true;
        break;
      }
      e += f.e;
      num = mulmod(num, f.u, ctx.M);
    }
    if (terminated) break;
    for (const auto& b : down) {
      PadicCoeff f = padic_from_integer(ctx, b.alpha + nn * b.beta);
      if (f.zero) throw AlgorithmError("lower parameter hits a non-positive integer");
      e -= f.e;
      den = mulmod(den, f.u, ctx.M);
    }
    cur.e = e;
    cur.u = mulmod(num, inverse_mod(ctx, den), ctx.M);
    try {
      out.c[n + 1] = padic_reduce(ctx, cur, r);
    } catch (const ValidationError& ex) {
      throw ValidationError(VK::non_integral_coefficient,
                            "NonIntegralCoefficient at degree " + std::to_string(n + 1) + ": " + ex.what());
    }
  }
  return out;
}

ModPSeries reduce_mod(const UniSeries& f, std::uint64_t p, unsigned r) {
  ModPSeries out;
  out.p = p;
  out.r = r;
  std::uint64_t m = out.modulus();
  Integer M = static_cast<unsigned long>(m);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    const Rational& q = f.c[i];
    Integer den = q.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0 && m > 1)
      throw ValidationError(VK::non_integral_coefficient,
                            "NonIntegralCoefficient at degree " + std::to_string(i) + ": " + to_string(q));
    Integer v = q.get_num() * inv;
    out.c.push_back(mpz_fdiv_ui(v.get_mpz_t(), m));
  }
  return out;
}

ModPSeries derived_series(const ModPSeries& F, std::uint64_t c0, const Rational& scale) {
  if (F.r < 2) throw ValidationError(VK::bad_argument, "derived series needs r >= 2");
  std::uint64_t m = F.modulus();
  ModPSeries out;
  out.p = F.p;
  out.r = F.r - 1;
  std::uint64_t m1 = out.modulus();
  Integer M1 = static_cast<unsigned long>(m1), inv;
  Integer den = scale.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M1.get_mpz_t()) == 0 || scale.get_num() % F.p == 0)
    throw ValidationError(VK::bad_argument, "scale must be a p-adic unit");
  Integer sv = scale.get_num() * inv;
  std::uint64_t s = mpz_fdiv_ui(sv.get_mpz_t(), m1);
  for (std::size_t i = 0; i < F.c.size(); ++i) {
    std::uint64_t v = F.c[i];
    if (i == 0) v = (v + m - c0 % m) % m;
    if (v % F.p != 0)
      throw ValidationError(VK::non_integral_coefficient,
                            "coefficient " + std::to_string(i) + " is not divisible by p after the shift");
    out.c.push_back(mulmod(v / F.p, s, m1));
  }
  return out;
}

ModPSeries truncate(const ModPSeries& F, std::size_t N) {
  ModPSeries out = F;
  if (out.c.size() > N + 1) out.c.resize(N + 1);
  return out;
}

std::string modpoly_to_string(const ModPoly& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i] << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

ModPSeries mul_trunc(const ModPSeries& a, const ModPSeries& b, std::size_t N) {
  require_same_ring(a, b);
  const ModPSeries* outer = &a;
  const ModPSeries* inner = &b;
  if (nonzeros(b) < nonzeros(a)) std::swap(outer, inner);
  ModPSeries out;
  out.p = a.p;
  out.r = a.r;
  out.c.assign(N + 1, 0);
  std::uint64_t m = a.modulus();
  for (std::size_t i = 0; i < outer->c.size() && i <= N; ++i) {
    if (outer->c[i] == 0) continue;
    std::size_t len = std::min(inner->c.size(), N + 1 - i);
    kernels::axpy_mod(out.c.data() + i, inner->c.data(), len, outer->c[i], m);
  }
  return out;
}

ModPSeries pow_trunc(const ModPSeries& a, std::uint64_t k, std::size_t N) {
  ModPSeries result;
  result.p = a.p;
  result.r = a.r;
  result.c.assign(N + 1, 0);
  result.c[0] = 1 % a.modulus();
  ModPSeries base = truncate(a, N);
  while (k) {
    if (k & 1) result = mul_trunc(result, base, N);
    k >>= 1;
    if (k) base = mul_trunc(base, base, N);
  }
  return result;
}

ModPSeries frobenius_substitute(const ModPSeries& F, std::uint64_t q, std::size_t N) {
  if (q == 0) throw ValidationError(VK::bad_argument, "substitution exponent must be positive");
  ModPSeries out;
  out.p = F.p;
  out.r = F.r;
  out.c.assign(N + 1, 0);
  for (std::size_t i = 0; i < F.c.size() && i * q <= N; ++i) out.c[i * q] = F.c[i];
  return out;
}

}  // namespace diag
