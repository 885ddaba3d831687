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


#include <numeric>

#include "diag/errors.hpp"
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "diag/ratfunc.hpp"

namespace diag {

namespace {

void check_family(long a, long b) {
  if (a <= 0 || b <= 0 || std::gcd(a, b) != 1 || b == 1)
    throw ValidationError(ValidationError::Kind::degenerate_parameters,
                          "family needs coprime a, b > 0 with a/b not an integer, got (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
}

MPoly poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_expr(text, vars).as_polynomial();
}

const std::vector<std::string> kABX{"a", "b", "x"};
const std::vector<std::string> kABN{"a", "b", "n"};

// Specialize a, b in a polynomial over (a, b, t) to a polynomial over (t).
MPoly specialize(const MPoly& p, long a, long b, const std::string& t) {
  std::vector<std::string> target{t};
  return p.substitute({MPoly::constant(target, a), MPoly::constant(target, b), MPoly::variable(target, t)});
}

}  // namespace

HypergeomSpec family_spec(long a, long b) {
  check_family(a, b);
  HypergeomSpec s;
  for (long i = 1; i <= 3; ++i) s.upper.push_back(make_rational(i * b - a, 3 * b));
  s.lower = {make_rational(b - a, b), Rational(1)};
  s.scale = 27;
  check_spec(s);
  return s;
}

Rational closed_form_S(long a, long b, unsigned n) {
  check_family(a, b);
  Rational num = pow(Rational(27), n);
  for (long i = 1; i <= 3; ++i) num *= pochhammer(make_rational(i * b - a, 3 * b), n);
  Rational den = pochhammer(make_rational(b - a, b), n);
  Integer f = factorial(n);
  den *= Rational(f * f);
  return num / den;
}

Rational coefficient_sum_oracle(long a, long b, unsigned n) {
  check_family(a, b);
  const long N = static_cast<long>(n);
  Rational sum = 0;
  Rational term = 1;  // (-a/b)_k / k!
  Rational alpha = make_rational(-a, b);
  for (long k = 0; k <= 2 * N; ++k) {
    if (k > 0) term = term * (alpha + (k - 1)) / k;
    sum += term * Rational(binomial(3 * N - k, 2 * N - k));
  }
  return Rational(binomial(2 * N, N)) * sum;
}

bool chu_vandermonde_check(long n, long k) {
  if (n < 0 || k < 0 || k > 2 * n) throw InputError("chu_vandermonde_check needs 0 <= k <= 2n");
  Integer lhs = 0;
  for (long j = 0; j <= k; ++j) lhs += binomial(k, j) * binomial(2 * n - k, n - j);
  return lhs == binomial(2 * n, n);
}

ODE ode_family_symbolic() {
  ODE o;
  o.P = {
      poly("(a-3*b)*(a-2*b)*(a-b)", kABX),
      poly("-b*((9*a^2-63*a*b+114*b^2)*x+a*b-b^2)", kABX),
      poly("b^2*x*((27*a-135*b)*x-a+3*b)", kABX),
      poly("b^3*x^2*(1-27*x)", kABX),
  };
  return o;
}

ODE ode_family(long a, long b) {
  check_family(a, b);
  ODE sym = ode_family_symbolic();
  ODE o;
  for (const auto& p : sym.P) o.P.push_back(specialize(p, a, b, "x"));
  return o;
}

UniSeries ode_apply(const ODE& ode, const UniSeries& f) {
  const std::size_t r = ode.order();
  if (f.c.size() <= r) throw ValidationError(ValidationError::Kind::insufficient_truncation,
                                             "series too short for an operator of order " + std::to_string(r));
  const std::size_t out_order = f.order() - r;
  UniSeries acc(f.var, std::vector<Rational>(out_order + 1));
  UniSeries dk = f;
  for (std::size_t k = 0; k <= r; ++k) {
    if (k) dk = derivative(dk);
    for (const auto& [e, c] : ode.P[k].terms()) {
      std::size_t shift = e.empty() ? 0 : e[0];
      for (std::size_t i = 0; i + shift <= out_order; ++i) acc.c[i + shift] += c * dk.c[i];
    }
  }
  return acc;
}

Recurrence family_recurrence_symbolic() {
  Recurrence r;
  r.Q = {poly("(a-3*b-3*b*n)*(a-2*b-3*b*n)*(a-b-3*b*n)", kABN), poly("-b^2*(n+1)^2*(a-b-b*n)", kABN)};
  return r;
}

Recurrence family_recurrence(long a, long b) {
  check_family(a, b);
  Recurrence sym = family_recurrence_symbolic();
  Recurrence r;
  for (const auto& q : sym.Q) r.Q.push_back(specialize(q, a, b, "n"));
  return r;
}

bool recurrence_verify_symbolic() {
  const auto& V = kABN;
  auto rf = [&](const std::string& num, const std::string& den) {
    return RationalFunction(poly(num, V), {poly(den, V)});
  };
  RationalFunction n(poly("n", V));
  RationalFunction one(MPoly::constant(V, 1));
  // Parameters of the family as rational functions of (a, b).
  RationalFunction u1 = rf("b-a", "3*b"), u2 = rf("2*b-a", "3*b"), u3 = rf("3*b-a", "3*b");
  RationalFunction l1 = rf("b-a", "b");
  RationalFunction up = (u1 + n) * (u2 + n) * (u3 + n) * Rational(27);
  RationalFunction down = (l1 + n) * (one + n) * (one + n);
  // ratio = up / down
  MPoly ratio_num = up.num * down.denominator();
  MPoly ratio_den = up.denominator() * down.num;
  Recurrence r = family_recurrence_symbolic();
  MPoly check = r.Q[0] * ratio_den + r.Q[1] * ratio_num;
  return check.is_zero();
}

bool proportional(const Recurrence& r, const Recurrence& s) {
  if (r.order() != s.order() || r.Q.empty()) return false;
  std::vector<std::string> vars = r.Q[0].variables();
  for (const auto& q : s.Q) vars = merge_variables(vars, q.variables());
  auto lift = [&](const MPoly& p) { return p.rebase(vars); };
  bool any_nonzero = false;
  for (std::size_t i = 0; i < r.Q.size(); ++i) {
    if (r.Q[i].is_zero() != s.Q[i].is_zero()) return false;
    any_nonzero = any_nonzero || !r.Q[i].is_zero();
    for (std::size_t j = i + 1; j < r.Q.size(); ++j)
      if (!(lift(r.Q[i]) * lift(s.Q[j]) == lift(r.Q[j]) * lift(s.Q[i]))) return false;
  }
  return any_nonzero;
}

}  // namespace diag
