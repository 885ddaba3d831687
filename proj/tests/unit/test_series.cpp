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
#include "diag/series.hpp"
#include "oracles.hpp"

using namespace diag;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiSeries ex(const std::string& t, const std::vector<std::string>& v, const std::vector<std::uint32_t>& b,
               Layout layout = Layout::automatic) {
  return expand(parse_validated(t, v), b, layout);
}

UniSeries uni(const std::string& t, std::uint32_t n) { return uni_expand(parse_validated(t, {"x"}), n); }

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("running example on the unit box") {
  auto s = ex("(1-x-y)^(1/3)/(1-x-y-z)", kXYZ, {1, 1, 1});
  CHECK(s.coefficient({0, 0, 0}) == 1);
  CHECK(s.coefficient({1, 0, 0}) == q(2, 3));
  CHECK(s.coefficient({0, 1, 0}) == q(2, 3));
  CHECK(s.coefficient({0, 0, 1}) == 1);
  CHECK(s.coefficient({1, 1, 0}) == q(10, 9));
  CHECK(s.coefficient({1, 0, 1}) == q(5, 3));
  CHECK(s.coefficient({0, 1, 1}) == q(5, 3));
  CHECK(s.coefficient({1, 1, 1}) == q(40, 9));
}

TEST_CASE("geometric series in three variables gives multinomials") {
  auto s = ex("1/(1-x-y-z)", kXYZ, {4, 4, 4});
  for (unsigned l = 0; l <= 4; ++l)
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned k = 0; k <= 4; ++k) {
        // (l+m+k)! / (l! m! k!) = C(n, m') C(m', l) with n = l+m+k, m' = l+m.
        Integer expect = oracle::choose(l + m + k, l + m) * oracle::choose(l + m, l);
        CHECK(s.coefficient({l, m, k}) == Rational(expect));
      }
}

TEST_CASE("constant expands to the unit series") {
  auto s = ex("1", kXYZ, {2, 2, 2});
  CHECK(s.nonzero_count() == 1);
  CHECK(s.coefficient({0, 0, 0}) == 1);
}

TEST_CASE("dense and sparse layouts agree") {
  auto d = ex("(1-x-y)^(2/3)/(1-x-y-z)", kXYZ, {4, 4, 4}, Layout::dense);
  auto s = ex("(1-x-y)^(2/3)/(1-x-y-z)", kXYZ, {4, 4, 4}, Layout::sparse);
  CHECK(d.dense());
  CHECK(!s.dense());
  CHECK(d == s);
  CHECK(multiseries_from_json(to_json(s)) == d);
}

TEST_CASE("diagonals") {
  // Product of three binomial series.
  auto d3 = diagonal(ex("(1-x)^(-1/3)*(1-y)^(-1/3)*(1-z)^(-1/3)", kXYZ, {8, 8, 8}));
  for (unsigned n = 0; n <= 8; ++n) {
    auto a = oracle::Q(1, 3);
    CHECK(d3.c[n] == oracle::hyp_coeff({a, a, a}, {1, 1}, 1, n));
  }
  // Central trinomials (3n)!/n!^3.
  auto g = diagonal(ex("1/(1-x-y-z)", kXYZ, {6, 6, 6}));
  for (unsigned n = 0; n <= 6; ++n) CHECK(g.c[n] == Rational(oracle::fact(3 * n) / (oracle::fact(n) * oracle::fact(n) * oracle::fact(n))));
  CHECK(g.c[3] == 1680);
  auto f = diagonal(ex("(1-x-y)^(1/3)/(1-x-y-z)", kXYZ, {6, 6, 6}));
  CHECK(f.c[1] == q(40, 9));
  CHECK(f.c[2] == q(47124, 729));
  for (unsigned n = 0; n <= 6; ++n) CHECK(f.c[n] == oracle::diag_family_coeff(oracle::Q(1, 3), n));
}

TEST_CASE("partial diagonals") {
  auto s = ex("1/(1-x-y)", {"x", "y"}, {5, 5});
  auto p = partial_diagonal(s, {{"x", "y"}}, {"t"});
  CHECK(p.variables() == std::vector<std::string>{"t"});
  CHECK(to_uni(p).c == diagonal(s).c);

  auto t = ex("x + y + x*y", {"x", "y"}, {2, 2});
  auto r = to_uni(partial_diagonal(t, {{"x", "y"}}, {"t"}));
  CHECK(r.c == std::vector<Rational>{0, 1, 0});

  CHECK_THROWS_AS(partial_diagonal(ex("x+y+z", kXYZ, {1, 1, 1}), {{"x", "y"}, {"y", "z"}}), ValidationError);
}

TEST_CASE("hadamard products") {
  auto g = uni("1/(1-x)", 10);
  CHECK(hadamard(g, g) == g);
  auto f = uni("(1-x)^(-5/9)", 12);
  auto h = hadamard(f, hyp_series(parse_hypergeom("3F2([1/9,4/9,7/9],[1/3,1];27)"), 12));
  CHECK(h.c == hyp_series(parse_hypergeom("4F3([1/9,4/9,5/9,7/9],[1/3,1,1];27)"), 12).c);
  auto w = uni("(1-x-x^2)^(1/3)", 10);
  CHECK(hadamard(w, g) == w);
}

TEST_CASE("composition") {
  auto f = uni("(1+x)^(1/3)/(1-2*x)", 10);
  CHECK(compose(f, uni("x", 10)).c == f.c);
  auto s = compose(uni("1/(1-x)", 10), uni("x^2", 10));
  for (std::size_t i = 0; i <= 10; ++i) CHECK(s.c[i] == (i % 2 == 0 ? 1 : 0));
  CHECK_THROWS_AS(compose(f, uni("1+x", 10)), ValidationError);

  // Pullback identity for 2F1([2/9,5/9],[2/3],27x).
  const std::size_t N = 20;
  auto inner = uni("-1728*x^3*(1-27*x)/(1-36*x+216*x^2)^2", N);
  auto rhs = uni_mul(uni_mul(uni("(1-27*x)^(-1/9)", N), uni("(1-36*x+216*x^2)^(-1/18)", N)),
                     compose(hyp_series(parse_hypergeom("2F1([1/36,19/36],[8/9];1)"), N), inner));
  CHECK(rhs.c == hyp_series(parse_hypergeom("2F1([2/9,5/9],[2/3];27)"), N).c);
}

TEST_CASE("D operator") {
  auto xy = ex("x*y", {"x", "y"}, {2, 2});
  auto d = d_operator(xy, "y");
  CHECK(d.variables() == std::vector<std::string>{"x"});
  CHECK(to_uni(d).c == std::vector<Rational>{0, 1, 0});

  auto c = d_operator(ex("1/(1-x) + 2", {"x", "y"}, {3, 3}), "y");
  CHECK(to_uni(c).c == std::vector<Rational>{3, 0, 0, 0});
  CHECK_THROWS_AS(d_operator(ex("x*y", {"x", "y"}, {3, 2}), "y"), ValidationError);
}

TEST_CASE("univariate helpers") {
  auto f = uni("1/(1-2*x)", 6);
  CHECK(rescale(f, q(1, 2)).c == uni("1/(1-x)", 6).c);
  CHECK(derivative(f).c[0] == 2);
  CHECK(first_mismatch(f, f) == std::nullopt);
  CHECK(first_mismatch(uni("x", 2), uni("x+x^2", 2)) == std::optional<std::size_t>{2});
  CHECK(truncate(f, 3).c.size() == 4);
}
