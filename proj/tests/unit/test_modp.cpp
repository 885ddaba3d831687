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


#include <doctest.h>

#include <random>

#include "diag/errors.hpp"
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "diag/modp.hpp"
#include "diag/series.hpp"

using namespace diag;

namespace {

const char* kSpec = "3F2([1/9,4/9,5/9],[1/3,1];729)";

ModPSeries mod2(std::size_t N) { return hyp_series_mod(parse_hypergeom(kSpec), 2, 1, N); }

std::uint64_t at(const ModPoly& a, std::size_t i) { return i < a.size() ? a[i] : 0; }

}  // namespace

TEST_CASE("p-adic bookkeeping") {
  auto ctx = padic_context(3, 4);
  CHECK(ctx.M == 81);
  auto c = padic_from_rational(ctx, make_rational(9, 2));
  CHECK(c.e == 2);
  CHECK(c.u == 41);
  CHECK(padic_reduce(ctx, c, 3) == 18);
  CHECK(padic_reduce(ctx, c, 2) == 0);
  auto z = padic_from_integer(ctx, 0);
  CHECK(z.zero);
  auto inv = padic_div(ctx, padic_from_integer(ctx, 1), c);
  CHECK(inv.e == -2);
  CHECK(padic_mul(ctx, inv, c).e == 0);
  CHECK(padic_mul(ctx, inv, c).u == 1);
  CHECK(mulmod(80, 80, 81) == 1);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(inverse_mod(ctx, 2) == 41);
}

TEST_CASE("mod-2 support is sixteen monomials") {
  auto F = mod2(600000);
  std::vector<std::size_t> expect{0,      2,      128,    130,    8192,   8194,   8320,   8322,
                                  524288, 524290, 524416, 524418, 532480, 532482, 532608, 532610};
  CHECK(F.support() == expect);
  // Same support as (1+x^2)(1+x^128)(1+x^8192)(1+x^524288).
  std::vector<std::size_t> prod;
  for (unsigned m = 0; m < 16; ++m)
    prod.push_back((m & 1 ? 2 : 0) + (m & 2 ? 128 : 0) + (m & 4 ? 8192 : 0) + (m & 8 ? 524288 : 0));
  std::sort(prod.begin(), prod.end());
  CHECK(prod == expect);
}

TEST_CASE("mod-2 Mahler relation") {
  auto F = mod2(600000);
  auto g = guess_mahler(F, 10, 16);
  REQUIRE(g);
  CHECK(g->kind == FunctionalEq::Kind::multiplicative);
  CHECK(g->q() == 64);
  CHECK(g->A == ModPoly{1, 0, 1});
  CHECK(verify_relation(F, *g, 600000).ok);

  FunctionalEq bad = *g;
  bad.A = {1, 1};
  auto v = verify_relation(F, bad, 600000);
  CHECK(!v.ok);
  REQUIRE(v.first_failure);
  CHECK(*v.first_failure == 1);

  // Packed and reference paths agree on small windows.
  for (std::size_t N : {1u, 3u, 7u, 15u, 16u, 200u}) {
    auto Fs = truncate(F, N);
    CHECK(verify_relation(Fs, *g, N).ok == verify_relation_reference(Fs, *g, N).ok);
    CHECK(verify_relation(Fs, bad, N).first_failure == verify_relation_reference(Fs, bad, N).first_failure);
  }
}

TEST_CASE("mod-2 algebraic relation through Frobenius") {
  auto F = mod2(4200);
  // F = (1+x^2) F^64 after F(x^64) = F(x)^64 over GF(2).
  auto F64 = pow_trunc(F, 64, 4200);
  ModPSeries rhs = F64;
  for (std::size_t n = 4200; n >= 2; --n) rhs.c[n] = (rhs.c[n] + F64.c[n - 2]) % 2;
  CHECK(rhs == F);
  CHECK(frobenius_substitute(F, 64, 4200) == F64);
  CHECK(frobenius_self_test(F));
}

TEST_CASE("mod-3 transformed series") {
  const std::size_t N = 19683;
  auto F = hyp_series_mod(parse_hypergeom(kSpec), 3, 2, N);
  CHECK(F.c[0] == 1);
  for (std::size_t n = 1; n <= N; ++n) CHECK_MESSAGE(F.c[n] % 3 == 0, n);

  // (F-1)/3 = 2(x + x^3 + x^9 + ...) mod 3.
  auto H = derived_series(F, 1, Rational(1));
  std::vector<std::size_t> powers{1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683};
  CHECK(H.support() == powers);
  for (auto k : powers) CHECK(H.c[k] == 2);

  auto G = derived_series(F, 1, make_rational(1, 2));
  auto a = guess_mahler(G, 10, 16);
  REQUIRE(a);
  CHECK(a->kind == FunctionalEq::Kind::affine);
  CHECK(a->q() == 3);
  CHECK(a->A == ModPoly{0, 1});
  CHECK(verify_relation(G, *a, N).ok);

  // G^3 - G + x = 0.
  auto G3 = pow_trunc(G, 3, N);
  for (std::size_t n = 0; n <= N; ++n) CHECK((G3.c[n] + 2 * G.c[n] + (n == 1 ? 1 : 0)) % 3 == 0);
  auto mp = guess_minpoly_mod(G, 4, 2);
  REQUIRE(mp);
  CHECK(verify_relation(G, *mp, N).ok);
  CHECK(mp->coeffs.size() == 4);

  CHECK_THROWS(derived_series(F, 1, Rational(3)));
  CHECK_THROWS(derived_series(F, 2, Rational(1)));
}

TEST_CASE("geometric series") {
  UniSeries g;
  g.c.assign(11, Rational(1));
  auto F5 = reduce_mod(g, 5, 1);
  CHECK(F5.c == std::vector<std::uint64_t>(11, 1));
  auto ones = hyp_series_mod(parse_hypergeom("1F0([1],[];1)"), 5, 1, 10);
  CHECK(ones == F5);

  g.c.assign(101, Rational(1));
  auto F2 = reduce_mod(g, 2, 1);
  auto m = guess_mahler(F2, 4, 4);
  REQUIRE(m);
  CHECK(m->kind == FunctionalEq::Kind::multiplicative);
  CHECK(m->q() == 2);
  CHECK(m->A == ModPoly{1, 1});
}

TEST_CASE("square root minimal polynomial mod 7") {
  auto s = uni_expand(parse_validated("(1+x)^(1/2)", {"x"}), 60);
  auto F = reduce_mod(s, 7, 1);
  // Independent check: F^2 = 1 + x mod 7.
  auto F2 = mul_trunc(F, F, 60);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(F2.c[n] == (n <= 1 ? 1u : 0u));
  auto mp = guess_minpoly_mod(F, 2, 1);
  REQUIRE(mp);
  REQUIRE(mp->coeffs.size() == 3);
  auto lead = at(mp->coeffs[2], 0);
  REQUIRE(lead != 0);
  CHECK(at(mp->coeffs[1], 0) == 0);
  CHECK(at(mp->coeffs[1], 1) == 0);
  CHECK(at(mp->coeffs[0], 0) == (7 - lead) % 7);
  CHECK(at(mp->coeffs[0], 1) == (7 - lead) % 7);
  CHECK(verify_relation(F, *mp, 60).ok);
}

TEST_CASE("agrees with exact reduction") {
  auto spec = parse_hypergeom(kSpec);
  auto exact = hyp_series(spec, 300);
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 5}, {3, 1}, {3, 3}, {5, 2}, {7, 1}})
    CHECK(hyp_series_mod(spec, p, r, 300) == reduce_mod(exact, p, r));
}

TEST_CASE("non-integral coefficients are refused") {
  CHECK_THROWS(hyp_series_mod(parse_hypergeom("3F2([1/9,4/9,5/9],[1/3,1];1)"), 3, 1, 20));
  UniSeries h;
  h.c = {Rational(1), make_rational(1, 2)};
  CHECK_THROWS(reduce_mod(h, 2, 1));
}

TEST_CASE("serialization") {
  auto F = mod2(20000);
  CHECK(modp_from_binary(modp_to_binary(F)) == F);
  CHECK(modp_from_sparse_text(modp_to_sparse_text(F)) == F);
  auto G = hyp_series_mod(parse_hypergeom(kSpec), 5, 3, 500);
  CHECK(modp_from_binary(modp_to_binary(G)) == G);
  CHECK(modp_from_sparse_text(modp_to_sparse_text(G)) == G);
  CHECK(modp_from_sparse_text("# diagtool 0.1.0 :: test\n" + modp_to_sparse_text(G)) == G);
  CHECK_THROWS(modp_from_binary("garbage"));
}

TEST_CASE("Frobenius self-test on random series") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    ModPSeries F;
    F.p = p;
    F.r = 1;
    F.c.resize(300);
    for (auto& v : F.c) v = rng() % p;
    CHECK(frobenius_self_test(F));
  }
}
