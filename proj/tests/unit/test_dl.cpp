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

#include "diag/denef_lipshitz.hpp"
#include "diag/errors.hpp"
#include "diag/hypergeom.hpp"
#include "diag/identity.hpp"
#include "oracles.hpp"

using namespace diag;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const char* kRunning = "(1-x-y)^(1/3)/(1-x-y-z)";

MPoly over(const MinPoly& mp, const std::string& t) {
  auto vars = mp.base;
  vars.push_back(mp.fvar);
  return parse_expr(t, vars).as_polynomial();
}

RationalFunction rf(const std::string& t, const std::vector<std::string>& vars) {
  return to_rational_function(parse_expr(t, vars));
}

}  // namespace

TEST_CASE("minimal polynomials") {
  auto mp = build_minpoly(parse_validated(kRunning, kXYZ));
  CHECK(mp.fvar == "f");
  // Canonical orientation is (Q f)^b - P^a, the negative of the printed form.
  CHECK(mp.p == -over(mp, "((x+y+z-1)*f)^3 + 1 - x - y"));

  auto r = build_minpoly(parse_validated("(1+x)/(1-2*x)", {"x"}));
  CHECK(r.p == over(r, "(1-2*x)*f - (1+x)"));

  auto c = build_minpoly(parse_validated("(1-x)^(2/3)", {"x"}));
  CHECK(c.p == over(c, "f^3 - (1-x)^2"));

  CHECK_THROWS_AS(build_minpoly(parse_validated("(1-x)^(1/2)+(1-x)^(1/3)", {"x"})), ValidationError);
}

TEST_CASE("etale shift") {
  auto mp = build_minpoly(parse_validated(kRunning, kXYZ));
  auto es = etale_shift(mp, 1);
  CHECK(es.f0 == 1);
  CHECK(es.shifted.p == -over(mp, "((x+y+z-1)*(f+1))^3 + 1 - x - y"));
  CHECK(es.derivative_at_origin == 3);

  auto lin = etale_shift(build_minpoly(parse_validated("x", {"x"})), 0);
  CHECK(lin.derivative_at_origin == 1);

  auto sq = build_minpoly(parse_validated("(1-x)^(1/2)", {"x"}));
  auto ss = etale_shift(sq, 1);
  CHECK(ss.shifted.p == over(sq, "(f+1)^2 - 1 + x"));
  CHECK(ss.derivative_at_origin == 2);
}

TEST_CASE("single-step rational function of the running example") {
  auto e = parse_validated(kRunning, kXYZ);
  auto r = dl_rational(etale_shift(build_minpoly(e), 1));
  auto printed = rf("3*f^2*(f+1)^2*(x*f+y*f+z*f-1)^3/((f+1)^3*(x*f+y*f+z*f-1)^3 - x*f - y*f + 1) + 1",
                    {"x", "y", "z", "f"});
  CHECK(equivalent(r.rebase(printed.variables()), printed));
  // D picks the terms with f-degree equal to the total x,y,z degree.
  auto box = std::vector<std::uint32_t>{3, 3, 3, 9};
  auto d = d_operator(expand(r, box), "f");
  CHECK(d == expand(e, {3, 3, 3}));
}

TEST_CASE("small single-step cases checked through D") {
  auto x = parse_validated("x", {"x"});
  auto r = dl_rational(etale_shift(build_minpoly(x), 0));
  CHECK(to_uni(d_operator(expand(r, {5, 5}), "f")).c == uni_expand(x, 5).c);

  auto one = parse_validated("1", {"x"});
  auto r1 = dl_rational(etale_shift(build_minpoly(one), 1));
  CHECK(to_uni(d_operator(expand(r1, {5, 5}), "f")).c == std::vector<Rational>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("variable doubling") {
  auto t = rf("t", {"t"});
  auto d = dl_double(t, "t", "u", "v");
  CHECK(d.den.empty());
  CHECK(d.num == parse_expr("u+v", {"u", "v"}).as_polynomial());

  auto g = dl_double(rf("1/(1-t)", {"t"}), "t", "u", "v");
  CHECK(equivalent(g, rf("1/((1-u)*(1-v))", {"u", "v"})));
  auto gs = expand(g, {6, 6});
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 0; j <= 6; ++j) CHECK(gs.coefficient({i, j}) == 1);
  CHECK_THROWS_AS(dl_double(t, "s", "u", "v"), ValidationError);
}

TEST_CASE("end-to-end on the running example") {
  auto e = parse_validated(kRunning, kXYZ);
  auto d = dl_full(e);
  CHECK(d.r.variables().size() == 6);
  CHECK(d.pairs.size() == 3);
  auto diag6 = dl_diagonal(d, 5);
  auto ref = hyp_series(family_spec(1, 3), 5);
  CHECK(diag6.c == ref.c);
  CHECK(diag6.c[2] == make_rational(47124, 729));
  CHECK(dl_reconstruct(d, {3, 3, 3}) == expand(e, {3, 3, 3}));
  CHECK(dl_d_operator_check(e, d, {3, 3, 3}));

  auto back = dl_result_from_json(d.to_json());
  CHECK(back.pairs == d.pairs);
  CHECK(back.shift == d.shift);
  CHECK(back.r.num == d.r.num);
  CHECK(back.r.den == d.r.den);
}

TEST_CASE("end-to-end on the two-thirds member and a univariate root") {
  auto e = parse_validated("(1-x-y)^(2/3)/(1-x-y-z)", kXYZ);
  auto d = dl_full(e);
  CHECK(dl_diagonal(d, 3).c == hyp_series(family_spec(2, 3), 3).c);

  auto s = parse_validated("(1-x)^(1/2)", {"x"});
  auto ds = dl_full(s);
  CHECK(ds.r.variables().size() == 2);
  CHECK(dl_diagonal(ds, 10).c == uni_expand(s, 10).c);
}

TEST_CASE("printed six-variable function is a recorded report") {
  auto rep = fixture_report(1, 3, 3);
  CHECK(rep.expect == Expect::report);
  CHECK(rep.error.empty());
  // The printed four-term formula has diagonal 1, 0, 0, ...; recorded, not asserted
  // as correct. The first coefficient agrees.
  REQUIRE(rep.mismatch);
  CHECK(rep.mismatch->index == 1);
  CHECK(rep.mismatch->lhs == 0);
  CHECK(rep.mismatch->rhs == make_rational(40, 9));
  CHECK(fixture_diagonal(2, 3, 2).c[0] == 1);
}
