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


#include "diag/upoly.hpp"

#include <sstream>

namespace diag {

RatFun::RatFun(QPoly num, QPoly den) {
  if (den.is_zero()) throw AlgorithmError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly(Rational(1));
    return;
  }
  QPoly g = QPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = QPoly::divmod(num, g).first;
    den = QPoly::divmod(den, g).first;
  }
  Rational l = den.lead();
  num_ = num * Rational(1 / l);
  den_ = den * Rational(1 / l);
}

Rational RatFun::eval(const Rational& n) const {
  Rational d = den_.eval(n);
  if (d == 0) throw AlgorithmError("rational function pole at n = " + diag::to_string(n));
  return num_.eval(n) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return RatFun();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.num_.is_zero()) throw AlgorithmError("division by zero in Q(n)");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    const Rational& a = p.c[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) os << diag::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_.degree() == 0) return diag::to_string(num_, var);
  return "(" + diag::to_string(num_, var) + ")/(" + diag::to_string(den_, var) + ")";
}

}  // namespace diag
