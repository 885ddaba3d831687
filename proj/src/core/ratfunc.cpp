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


#include "diag/ratfunc.hpp"

#include "diag/errors.hpp"

namespace diag {

MPoly RationalFunction::denominator() const {
  MPoly d = MPoly::constant(num.variables(), 1);
  for (const auto& f : den) d = d * f;
  return d;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& f : den) d *= f.evaluate(point);
  if (d == 0) throw AlgorithmError("rational function evaluated at a pole");
  return num.evaluate(point) / d;
}

RationalFunction RationalFunction::substitute(const std::vector<MPoly>& images) const {
  RationalFunction r(num.substitute(images));
  for (const auto& f : den) r.den.push_back(f.substitute(images));
  return r;
}

RationalFunction RationalFunction::rebase(const std::vector<std::string>& vars) const {
  RationalFunction r(num.rebase(vars));
  for (const auto& f : den) r.den.push_back(f.rebase(vars));
  return r;
}

std::string RationalFunction::denominator_string() const {
  if (den.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (i) s += "*";
    s += "(" + den[i].to_string() + ")";
  }
  return s;
}

std::string RationalFunction::to_string() const {
  if (den.empty()) return num.to_string();
  return "(" + num.to_string() + ")/(" + denominator_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den.empty() && b.den.empty()) return RationalFunction(a.num + b.num);
  RationalFunction r(a.num * b.denominator() + b.num * a.denominator());
  r.den = a.den;
  r.den.insert(r.den.end(), b.den.begin(), b.den.end());
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + b * Rational(-1);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r(a.num * b.num);
  r.den = a.den;
  r.den.insert(r.den.end(), b.den.begin(), b.den.end());
  return r;
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
  return RationalFunction(a.num * c, a.den);
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num * b.denominator() == b.num * a.denominator();
}

}  // namespace diag
