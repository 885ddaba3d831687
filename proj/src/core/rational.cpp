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


#include "diag/rational.hpp"

#include <cctype>

#include "diag/errors.hpp"

namespace diag {

Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw InputError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational make_rational(long n, long d) { return make_rational(Integer(n), Integer(d)); }

namespace {

Integer parse_integer(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  bool neg = false;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw InputError("malformed rational '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw InputError("malformed rational '" + s + "'");
  Integer z(s.substr(i), 10);
  return neg ? Integer(-z) : z;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, true));
  Integer n = parse_integer(s.substr(0, slash), true);
  Integer d = parse_integer(s.substr(slash + 1), false);
  if (d == 0) throw InputError("malformed rational '" + text + "': zero denominator");
  return make_rational(n, d);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw InputError("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rational(n, d);
}

Rational pochhammer(const Rational& x, unsigned long n) {
  Rational r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= x + i;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

long valuation(const Integer& z, unsigned long p) {
  if (z == 0) throw InputError("valuation of zero");
  Integer pp(p);
  return static_cast<long>(mpz_remove(Integer().get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}

long valuation(const Rational& q, unsigned long p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

}  // namespace diag
