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

#include <string>
#include <utility>
#include <vector>

#include "diag/expr.hpp"
#include "diag/ratfunc.hpp"
#include "diag/series.hpp"

namespace diag {

// Polynomial in base variables x_1..x_n and a function variable f that
// vanishes at f = the expansion of the source expression.
struct MinPoly {
  std::vector<std::string> base;
  std::string fvar;
  MPoly p;  // over base + {fvar}
};

// For f = R * P^(a/b) / Q returns (Q f)^b - R^b P^a (a >= 0) or
// P^(-a) (Q f)^b - R^b (a < 0). Plain rational R/Q gives Q f - R.
// Throws ValidationError(unsupported_shape) for anything else.
MinPoly build_minpoly(const ValidatedExpr& e);

struct EtaleShift {
  MinPoly shifted;  // p(x, f + f0)
  Rational f0;
  Rational derivative_at_origin;
};
// Throws AlgorithmError("EtaleFailure ...") when the f-derivative of the
// shifted polynomial vanishes at the origin.
EtaleShift etale_shift(const MinPoly& mp, const Rational& f0);

// r = f^2 * dp/df(x f, f) / p(x f, f) + f0 over base + {f}. The factor f shared
// by numerator and denominator is cancelled so the denominator is a unit at 0.
RationalFunction dl_rational(const EtaleShift& es);

// (u r(..,u) - v r(..,v)) / (u - v): t is renamed u in place and v is appended.
// Denominator factors free of t are kept once; the division by u - v is exact
// on the cleared numerator and throws AlgorithmError("DivisionNotExact") otherwise.
RationalFunction dl_double(const RationalFunction& r, const std::string& t, const std::string& u,
                           const std::string& v);

struct DLResult {
  RationalFunction r;                                     // over 2n variables
  std::vector<std::pair<std::string, std::string>> pairs;  // (x_i, partner)
  Rational shift;                                         // f0
  MinPoly minpoly;
  RationalFunction r_single;  // the (n+1)-variable stage

  std::string to_json() const;
};
DLResult dl_result_from_json(const std::string& text);

DLResult dl_full(const ValidatedExpr& e);

// Bounds for the 2n-variable expansion that reach diagonal coefficient N.
UniSeries dl_diagonal(const DLResult& d, std::uint32_t N);
// Partial diagonal over the pairs on a box of the original variables.
MultiSeries dl_reconstruct(const DLResult& d, const std::vector<std::uint32_t>& box);
// D-operator check: D(expand(r - f0)) == expand(e) - f0 on the box.
bool dl_d_operator_check(const ValidatedExpr& e, const DLResult& d, const std::vector<std::uint32_t>& box);

// The four-term six-variable function over (x,y,z,u,v,w), transcribed as
// printed. Returns the four terms followed by the constant 1.
std::vector<RationalFunction> printed_6var_fixture(long a, long b);
std::string printed_6var_fixture_text(long a, long b);
UniSeries fixture_diagonal(long a, long b, std::uint32_t N);

}  // namespace diag
