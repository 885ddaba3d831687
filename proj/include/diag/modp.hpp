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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diag/hypergeom.hpp"
#include "diag/rational.hpp"

namespace diag {

// Working ring Z/p^K with p^K < 2^62.
struct PadicContext {
  std::uint64_t p = 2;
  unsigned K = 1;
  std::uint64_t M = 2;  // p^K
};
// K is clamped to the largest precision with p^K < 2^62; the default 64 p-adic
// digits (or DIAG_PRECISION) is reduced the same way.
PadicContext padic_context(std::uint64_t p, unsigned K);
unsigned default_precision();

// p^e * u with u a unit mod p^K, or exact zero.
struct PadicCoeff {
  long e = 0;
  std::uint64_t u = 1;
  bool zero = false;
};
PadicCoeff padic_from_integer(const PadicContext& ctx, std::int64_t v);
PadicCoeff padic_from_rational(const PadicContext& ctx, const Rational& q);
PadicCoeff padic_mul(const PadicContext& ctx, const PadicCoeff& a, const PadicCoeff& b);
PadicCoeff padic_div(const PadicContext& ctx, const PadicCoeff& a, const PadicCoeff& b);
// Value mod p^r (r <= K). Throws ValidationError(non_integral_coefficient) when e < 0.
std::uint64_t padic_reduce(const PadicContext& ctx, const PadicCoeff& a, unsigned r);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a unit modulo p^K.
std::uint64_t inverse_mod(const PadicContext& ctx, std::uint64_t a);

struct ModPSeries {
  std::uint64_t p = 2;
  unsigned r = 1;
  std::vector<std::uint64_t> c;  // degrees 0..N, entries in [0, p^r)

  std::uint64_t modulus() const;
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  std::vector<std::size_t> support() const;
  friend bool operator==(const ModPSeries&, const ModPSeries&) = default;
};

// Coefficients of the pFq series mod p^r through degree N from the term ratio,
// tracking (valuation, unit) per coefficient.
ModPSeries hyp_series_mod(const HypergeomSpec& spec, std::uint64_t p, unsigned r, std::size_t N,
                          unsigned K = 0);
// Reduction of exact rational coefficients (must be p-integral).
ModPSeries reduce_mod(const UniSeries& f, std::uint64_t p, unsigned r);
// ((F - c0) / p) * scale mod p^(r-1); every coefficient of F - c0 must be divisible by p
// and scale must be a p-adic unit.
ModPSeries derived_series(const ModPSeries& F, std::uint64_t c0, const Rational& scale);
ModPSeries truncate(const ModPSeries& F, std::size_t N);

// Polynomials over Z/p^r as dense coefficient vectors.
using ModPoly = std::vector<std::uint64_t>;
std::string modpoly_to_string(const ModPoly& a, const std::string& var = "x");

// Truncated product through degree N (sparse-aware in the first operand).
ModPSeries mul_trunc(const ModPSeries& a, const ModPSeries& b, std::size_t N);
ModPSeries pow_trunc(const ModPSeries& a, std::uint64_t k, std::size_t N);
// F(x^q) through degree N.
ModPSeries frobenius_substitute(const ModPSeries& F, std::uint64_t q, std::size_t N);

struct FunctionalEq {
  enum class Kind { multiplicative, affine, minpoly };
  Kind kind = Kind::multiplicative;
  std::uint64_t p = 2;
  unsigned s = 0;                  // q = p^s for Mahler kinds
  ModPoly A;                       // Mahler kinds
  std::vector<ModPoly> coeffs;     // minpoly: sum coeffs[i] * F^i
  std::uint64_t q() const;
  std::string to_string() const;
};

struct VerifyResult {
  bool ok = false;
  std::optional<std::size_t> first_failure;  // degree of the first failing coefficient
};
// Exact congruence through degree N. Over GF(2) the Mahler checks run on packed bits.
VerifyResult verify_relation(const ModPSeries& F, const FunctionalEq& eq, std::size_t N);
// The same check on the unpacked reference path (for cross-checking).
VerifyResult verify_relation_reference(const ModPSeries& F, const FunctionalEq& eq, std::size_t N);

// Smallest s <= sMax (then minimal A with deg A <= degAMax) with
// F = A F(x^(p^s)) when F(0) != 0, or F = A + F(x^(p^s)) when F(0) = 0.
// Guesses on the first half of the series and verifies on all of it.
std::optional<FunctionalEq> guess_mahler(const ModPSeries& F, unsigned sMax, std::size_t degAMax);
// Nontrivial sum c_i(x) F^i = 0 with i <= dMax, deg c_i <= DMax over GF(p),
// by elimination on the first half; columns ordered (i, j) ascending and the
// first dependent column yields the relation. Verified on all of F.
std::optional<FunctionalEq> guess_minpoly_mod(const ModPSeries& F, std::size_t dMax, std::size_t DMax);

// F(x)^p == F(x^p) through the series degree (r = 1 only).
bool frobenius_self_test(const ModPSeries& F);

// Binary dump: "DIAGMODP" magic, u64 p, u32 r, u64 N, u8 width, then N+1
// little-endian residues of `width` bytes.
std::string modp_to_binary(const ModPSeries& F);
ModPSeries modp_from_binary(const std::string& bytes);
// "# p=2 r=1 N=600000" header then one "degree:residue" line per nonzero coefficient.
std::string modp_to_sparse_text(const ModPSeries& F);
ModPSeries modp_from_sparse_text(const std::string& text);

}  // namespace diag
