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

#include <gmpxx.h>

#include <string>

namespace diag {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds n/d in lowest terms. Throws InputError if d == 0.
Rational make_rational(const Integer& n, const Integer& d);
Rational make_rational(long n, long d = 1);

// Accepts "p", "-p", "p/q", "+p/q" with arbitrary-size integers.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Rational pow(const Rational& base, long exponent);

// Rising factorial (x)_n.
Rational pochhammer(const Rational& x, unsigned long n);
Integer binomial(long n, long k);
Integer factorial(unsigned long n);

// p-adic valuation of a nonzero integer / rational.
long valuation(const Integer& z, unsigned long p);
long valuation(const Rational& q, unsigned long p);

}  // namespace diag
