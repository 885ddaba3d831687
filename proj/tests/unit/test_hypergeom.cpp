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
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "oracles.hpp"

using namespace diag;

namespace {

HypergeomSpec spec(const std::string& t) { return parse_hypergeom(t); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("integer series at scale 3^6 and 27^2") {
  CHECK(hyp_series(spec("3F2([2/9,5/9,8/9],[2/3,1];729)"), 3).c == ints({1, 120, 47124, 23483460}));
  CHECK(hyp_series(spec("3F2([1/9,4/9,7/9],[1/3,1];729)"), 3).c == ints({1, 84, 32760, 16302000}));
  auto h = hyp_series(spec("3F2([1/9,4/9,5/9],[1/3,1];729)"), 6).c;
  std::vector<Rational> expect{1, 60, 20475, 9373650, 4881796920, 2734407111744, Rational("1605040007778900")};
  CHECK(h == expect);
}

TEST_CASE("series matches the Pochhammer definition") {
  auto s = spec("4F3([2/9,5/9,8/9,-1/3],[1/3,5/6,1];27)");
  auto f = hyp_series(s, 15);
  for (unsigned n = 0; n <= 15; ++n)
    CHECK(f.c[n] == oracle::hyp_coeff({oracle::Q(2, 9), oracle::Q(5, 9), oracle::Q(8, 9), oracle::Q(-1, 3)},
                                      {oracle::Q(1, 3), oracle::Q(5, 6), 1}, 27, n));
}

TEST_CASE("spec parsing and validation") {
  auto s = spec("3F2([2/9,5/9,8/9],[2/3,1];27)");
  CHECK(s.upper.size() == 3);
  CHECK(s.scale == 27);
  CHECK(parse_hypergeom(to_string(s)) == s);
  CHECK_THROWS_AS(spec("3F2([1/3,1/3],[1];1)"), InputError);
  CHECK_THROWS_AS(spec("2F1([1/3,1/3],[-2];1)"), ValidationError);
}

TEST_CASE("height") {
  CHECK(height(spec("3F2([1/3,1/3,1/3],[1,1];1)")) == 3);
  CHECK(height(spec("3F2([2/9,5/9,8/9],[2/3,1];1)")) == 1);
  CHECK(height(spec("2F1([1,2],[1];1)")) == 0);
}

TEST_CASE("global boundedness witness") {
  auto w = globally_bounded_witness(hyp_series(spec("3F2([2/9,5/9,8/9],[2/3,1];1)"), 30), 100000, 10);
  REQUIRE(w);
  CHECK(w->c == 729);
  CHECK(w->d == 1);

  // (1-x)^(-1/3): the smallest c is read off the 3-adic valuations directly.
  auto f = hyp_series(spec("1F0([1/3],[];1)"), 40);
  long need = 0;
  for (unsigned n = 1; n <= 40; ++n) need = std::max(need, (-valuation(f.c[n], 3) + static_cast<long>(n) - 1) / static_cast<long>(n));
  auto wb = globally_bounded_witness(f, 100000, 10);
  REQUIRE(wb);
  CHECK(wb->d == 1);
  CHECK(wb->c == oracle::qpow(3, static_cast<unsigned long>(need)).get_num());
  CHECK(wb->c == 9);

  UniSeries p("x", ints({1, -4, 7}));
  auto wp = globally_bounded_witness(p, 100, 10);
  REQUIRE(wp);
  CHECK(wp->c == 1);
  CHECK(wp->d == 1);
}

TEST_CASE("prime heuristic") {
  CHECK(gb_heuristic(spec("2F1([2/9,5/9],[2/3];1)"), 60, 10).likely_unbounded);
  CHECK(!gb_heuristic(spec("2F1([5/12,1/12],[1/4];27)"), 60, 10).likely_unbounded);
  // Denominators of (8/9)_n/n! are powers of 3 only.
  auto f = hyp_series(spec("1F0([8/9],[];1)"), 60);
  for (const auto& c : f.c) {
    Integer d = c.get_den();
    while (d % 3 == 0) d /= 3;
    CHECK(d == 1);
  }
  CHECK(!gb_heuristic(spec("1F0([8/9],[];1)"), 60, 10).likely_unbounded);
}

TEST_CASE("Hadamard factorization report") {
  auto r = hadamard_factorizations(q(2, 9), q(5, 9), q(8, 9), q(2, 3));
  CHECK(r.entries.size() == 6);
  CHECK(!r.route_found);
  for (const auto& e : r.entries) CHECK(e.identity_holds);
  CHECK(!hadamard_factorizations(q(1, 9), q(4, 9), q(7, 9), q(1, 3)).route_found);
  CHECK(hadamard_factorizations(q(3, 4), q(5, 12), q(1, 12), q(1, 4)).route_found);
}

TEST_CASE("family parameters") {
  CHECK(family_spec(1, 3) == spec("3F2([2/9,5/9,8/9],[2/3,1];27)"));
  CHECK(family_spec(2, 3) == spec("3F2([1/9,4/9,7/9],[1/3,1];27)"));
  CHECK(family_spec(1, 7) == spec("3F2([2/7,13/21,20/21],[6/7,1];27)"));
  auto s17 = hyp_series(family_spec(1, 7), 2).c;
  CHECK(s17[1] == q(260, 49));
  CHECK(s17[2] == q(188190, 2401));
  CHECK(hyp_series(family_spec(3, 4), 2).c[2] == q(41769, 1024));
  CHECK_THROWS_AS(family_spec(1, 1), ValidationError);
}

TEST_CASE("closed form and the double sum") {
  CHECK(closed_form_S(1, 3, 0) == 1);
  CHECK(closed_form_S(1, 3, 1) == q(40, 9));
  CHECK(coefficient_sum_oracle(1, 3, 1) == 2 * (3 - q(2, 3) - q(1, 9)));
  CHECK(coefficient_sum_oracle(5, 7, 0) == 1);
  CHECK(coefficient_sum_oracle(2, 3, 2) == q(32760, 729));
  CHECK(closed_form_S(3, 4, 2) == q(41769, 1024));
  for (long a : {1, 2, 4, 5})
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(closed_form_S(a, 3, n) == oracle::diag_family_coeff(oracle::Q(a, 3), n));
}

TEST_CASE("Chu-Vandermonde") {
  CHECK(chu_vandermonde_check(1, 0));
  CHECK(chu_vandermonde_check(5, 3));
  CHECK(chu_vandermonde_check(0, 0));
}

TEST_CASE("order-3 operator") {
  auto L = ode_family(1, 3);
  REQUIRE(L.order() == 3);
  std::vector<std::string> x{"x"};
  auto P = [&](const char* t) { return parse_expr(t, x).as_polynomial(); };
  CHECK(L.P[3] == P("27*x^2*(1-27*x)"));
  CHECK(L.P[2] == P("9*x*(-378*x+8)"));
  CHECK(L.P[1] == P("-3*(846*x-6)"));
  CHECK(L.P[0] == P("(-8)*(-5)*(-2)"));
  CHECK_THROWS_AS(ode_family(1, 1), ValidationError);
  auto r = ode_apply(L, hyp_series(family_spec(1, 3), 40));
  for (std::size_t i = 0; i <= 35; ++i) CHECK(r.c[i] == 0);
  auto r23 = ode_apply(ode_family(2, 3), hyp_series(family_spec(2, 3), 30));
  for (const auto& c : r23.c) CHECK(c == 0);
}

TEST_CASE("ode_apply on simple operators") {
  std::vector<std::string> x{"x"};
  ODE d1{{MPoly::constant(x, -1), MPoly::constant(x, 1)}};
  UniSeries e("x", {});
  for (unsigned n = 0; n <= 12; ++n) e.c.push_back(Rational(1) / Rational(oracle::fact(n)));
  for (const auto& c : ode_apply(d1, e).c) CHECK(c == 0);
  ODE d{{MPoly(x), MPoly::constant(x, 1)}};
  for (const auto& c : ode_apply(d, UniSeries("x", ints({1, 0, 0}))).c) CHECK(c == 0);
}

TEST_CASE("family recurrence") {
  CHECK(recurrence_verify_symbolic());
  auto rec = family_recurrence(1, 3);
  // n = 0: (-8)(-5)(-2) S(0) = -80 and 9(-2) S(1) = -80.
  CHECK(rec.Q[0].evaluate({Rational(0)}) * closed_form_S(1, 3, 0) == -80);
  CHECK(rec.Q[1].evaluate({Rational(0)}) * closed_form_S(1, 3, 1) == 80);
  auto r23 = family_recurrence(2, 3);
  CHECK(r23.Q[0].evaluate({Rational(1)}) * closed_form_S(2, 3, 1) + r23.Q[1].evaluate({Rational(1)}) * closed_form_S(2, 3, 2) == 0);
}
