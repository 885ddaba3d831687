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
#include <vector>

#include "diag/mpoly.hpp"

namespace diag {

// num / (den[0] * den[1] * ...). Factors are kept unexpanded: expansion divides
// by them one at a time, and the doubling step needs to tell them apart.
struct RationalFunction {
  MPoly num;
  std::vector<MPoly> den;

  RationalFunction() = default;
  explicit RationalFunction(MPoly n) : num(std::move(n)) {}
  RationalFunction(MPoly n, std::vector<MPoly> d) : num(std::move(n)), den(std::move(d)) {}

  const std::vector<std::string>& variables() const { return num.variables(); }
  MPoly denominator() const;
  Rational evaluate(const std::vector<Rational>& point) const;
  RationalFunction substitute(const std::vector<MPoly>& images) const;
  RationalFunction rebase(const std::vector<std::string>& vars) const;

  // "(num)/((d1)*(d2))" in the expression grammar.
  std::string to_string() const;
  std::string denominator_string() const;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const Rational& c);
// Equality as rational functions (cross multiplication), not as representations.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

}  // namespace diag
