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


#include <cstdlib>
#include <string>

#include "diag/errors.hpp"
#include "diag/modp.hpp"

namespace diag {

namespace {

using u128 = unsigned __int128;
using VK = ValidationError::Kind;

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

unsigned default_precision() {
  if (const char* env = std::getenv("DIAG_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 100000) return static_cast<unsigned>(v);
  }
  return 64;
}

PadicContext padic_context(std::uint64_t p, unsigned K) {
  if (p > (1u << 31) || !is_prime_u64(p))
    throw ValidationError(VK::bad_argument, "p must be a prime below 2^31, got " + std::to_string(p));
  if (K == 0) K = default_precision();
  PadicContext ctx;
  ctx.p = p;
  ctx.K = 0;
  ctx.M = 1;
  const std::uint64_t limit = std::uint64_t{1} << 62;
  while (ctx.K < K && ctx.M <= (limit - 1) / p) {
    ctx.M *= p;
    ++ctx.K;
  }
  return ctx;
}

std::uint64_t inverse_mod(const PadicContext& ctx, std::uint64_t a) {
  a %= ctx.M;
  if (a % ctx.p == 0) throw AlgorithmError("inverse of a non-unit modulo p^K");
  // Inverse mod p by Fermat, then Hensel lifting x <- x (2 - a x).
  std::uint64_t x = ctx.p == 2 ? 1 : powmod(a % ctx.p, ctx.p - 2, ctx.p);
  while (mulmod(a, x, ctx.M) != 1) {
    std::uint64_t ax = mulmod(a, x, ctx.M);
    x = mulmod(x, (2 + ctx.M - ax) % ctx.M, ctx.M);
  }
  return x;
}

PadicCoeff padic_from_integer(const PadicContext& ctx, std::int64_t v) {
  PadicCoeff c;
  if (v == 0) {
    c.zero = true;
    return c;
  }
  bool neg = v < 0;
  std::uint64_t m = neg ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  while (m % ctx.p == 0) {
    m /= ctx.p;
    ++c.e;
  }
  m %= ctx.M;
  c.u = neg ? (ctx.M - m) % ctx.M : m;
  return c;
}

PadicCoeff padic_from_rational(const PadicContext& ctx, const Rational& q) {
  PadicCoeff c;
  if (q == 0) {
    c.zero = true;
    return c;
  }
  Integer num = q.get_num(), den = q.get_den();
  Integer P = static_cast<unsigned long>(ctx.p);
  c.e = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t())) -
        static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()));
  std::uint64_t un = mpz_fdiv_ui(num.get_mpz_t(), ctx.M);
  std::uint64_t ud = mpz_fdiv_ui(den.get_mpz_t(), ctx.M);
  c.u = mulmod(un, inverse_mod(ctx, ud), ctx.M);
  return c;
}

PadicCoeff padic_mul(const PadicContext& ctx, const PadicCoeff& a, const PadicCoeff& b) {
  PadicCoeff c;
  if (a.zero || b.zero) {
    c.zero = true;
    return c;
  }
  c.e = a.e + b.e;
  c.u = mulmod(a.u, b.u, ctx.M);
  return c;
}

PadicCoeff padic_div(const PadicContext& ctx, const PadicCoeff& a, const PadicCoeff& b) {
  if (b.zero) throw AlgorithmError("p-adic division by zero");
  PadicCoeff c;
  if (a.zero) {
    c.zero = true;
    return c;
  }
  c.e = a.e - b.e;
  c.u = mulmod(a.u, inverse_mod(ctx, b.u), ctx.M);
  return c;
}

std::uint64_t padic_reduce(const PadicContext& ctx, const PadicCoeff& a, unsigned r) {
  if (a.zero) return 0;
  if (a.e < 0)
    throw ValidationError(VK::non_integral_coefficient,
                          "coefficient has p-adic valuation " + std::to_string(a.e) + " at p = " + std::to_string(ctx.p));
  if (r > ctx.K) throw ResourceError("PrecisionExhausted: r = " + std::to_string(r) + " exceeds working precision");
  if (static_cast<unsigned long>(a.e) >= r) return 0;
  std::uint64_t pr = 1;
  for (unsigned i = 0; i < r; ++i) pr *= ctx.p;
  std::uint64_t pe = 1;
  for (long i = 0; i < a.e; ++i) pe *= ctx.p;
  return mulmod(a.u % pr, pe, pr);
}

}  // namespace diag
