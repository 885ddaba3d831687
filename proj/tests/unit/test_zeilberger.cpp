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

#include "diag/errors.hpp"
#include "diag/hypergeom.hpp"
#include "diag/zeilberger.hpp"
#include "oracles.hpp"

using namespace diag;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
QPoly P(std::vector<Rational> c) { return QPoly(std::move(c)); }

// Brute-force sums of t(n, k) over all k.
std::vector<Rational> sums(const HyperTerm& t, long n_max) {
  std::vector<Rational> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(t.sum(n));
  return out;
}

bool annihilates(const Recurrence& rec, const std::vector<Rational>& S) {
  for (std::size_t n = 0; n + rec.order() < S.size(); ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= rec.order(); ++i) acc += rec.Q[i].evaluate({Rational(static_cast<long>(n))}) * S[n + i];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Gosper on k*k!") {
  // t(k+1)/t(k) = (k+1)^2 / k
  auto g = gosper(P({1, 2, 1}), P({0, 1}));
  REQUIRE(g.found);
  // z(k) = R(k) t(k) telescopes to t(k).
  auto t = [](long k) -> Rational { return Rational(k) * Rational(oracle::fact(k)); };
  for (long k = 1; k <= 10; ++k) CHECK(g.eval(k + 1) * t(k + 1) - g.eval(k) * t(k) == t(k));
  Rational partial = 0;
  for (long k = 1; k <= 8; ++k) partial += t(k);
  CHECK(partial == Rational(oracle::fact(9)) - 1);
}

TEST_CASE("Gosper rejects the harmonic term") {
  // t(k) = 1/k: ratio k/(k+1).
  CHECK(!gosper(P({0, 1}), P({1, 1})).found);
}

TEST_CASE("Gosper on 2^k") {
  auto g = gosper(P({2}), P({1}));
  REQUIRE(g.found);
  for (long k = 0; k < 6; ++k) CHECK(g.eval(k) == 1);
}

TEST_CASE("sum of binomials") {
  auto t = binomial_term();
  auto z = zeilberger(t);
  CHECK(z.rec.order() == 1);
  CHECK(z.rec.Q[0].evaluate({q(7)}) == -2 * z.rec.Q[1].evaluate({q(7)}));
  auto S = sums(t, 10);
  for (long n = 0; n <= 10; ++n) CHECK(S[n] == Rational(oracle::qpow(2, n)));
  CHECK(annihilates(z.rec, S));
  CHECK(certificate_verify(t, z.rec, z.cert, default_grid(t, z.rec, z.cert, 10, 14), 10));
}

TEST_CASE("sum of squared binomials") {
  auto t = binomial_squared_term();
  auto z = zeilberger(t);
  REQUIRE(z.rec.order() == 1);
  for (long n = 0; n < 5; ++n)
    CHECK(z.rec.Q[0].evaluate({q(n)}) * (n + 1) == -z.rec.Q[1].evaluate({q(n)}) * (4 * n + 2));
  auto S = sums(t, 10);
  for (long n = 0; n <= 10; ++n) CHECK(S[n] == Rational(oracle::choose(2 * n, n)));
  CHECK(annihilates(z.rec, S));
}

TEST_CASE("family summand reproduces the family recurrence") {
  auto t = family_summand(1, 3);
  auto S = sums(t, 8);
  for (long n = 0; n <= 8; ++n) CHECK(S[n] == closed_form_S(1, 3, n));
  auto z = zeilberger(t);
  REQUIRE(z.rec.order() == 1);
  CHECK(proportional(z.rec, family_recurrence(1, 3)));
  // (-8-9n)(-5-9n)(-2-9n) S(n) = 9 (n+1)^2 (-2-3n) S(n+1), up to a unit of Q(n).
  for (long n = 0; n < 6; ++n) {
    Rational a = (-8 - 9 * n) * (-5 - 9 * n) * (-2 - 9 * n), b = 9 * (n + 1) * (n + 1) * (-2 - 3 * n);
    CHECK(z.rec.Q[0].evaluate({q(n)}) * b == -z.rec.Q[1].evaluate({q(n)}) * a);
  }
  CHECK(certificate_verify(t, z.rec, z.cert, default_grid(t, z.rec, z.cert, 15, 49), 15));
}

TEST_CASE("perturbed certificate is rejected") {
  auto t = family_summand(1, 3);
  auto z = zeilberger(t);
  Certificate bad = z.cert;
  bad.num = bad.num + bad.den;  // R + 1
  CHECK(!certificate_verify(t, z.rec, bad, default_grid(t, z.rec, bad, 10, 34), 10));
}

TEST_CASE("term parser") {
  auto t = parse_hyperterm("binomial(n,k)^2");
  for (long n = 0; n < 6; ++n) CHECK(t.sum(n) == Rational(oracle::choose(2 * n, n)));
  auto f = parse_hyperterm("binomial(2n,n)*poch(-1/3,k)/fact(k)*binomial(3n-k,2n-k)");
  f.k_hi_n = 2;
  f.k_hi_c = 0;
  for (long n = 0; n < 5; ++n) CHECK(f.sum(n) == closed_form_S(1, 3, n));
  CHECK_THROWS_AS(parse_hyperterm("binomial(n,"), InputError);
}

TEST_CASE("recurrence order cap") {
  // Harmonic-like sums have no first-order telescoper here; a cap of 0 must fail loudly.
  CHECK_THROWS(zeilberger(binomial_term(), 0));
}
