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

#include <optional>
#include <string>
#include <vector>

#include "diag/mpoly.hpp"
#include "diag/series.hpp"

namespace diag {

// pFq with argument scale*x. The coefficient of x^n is
// scale^n * prod (a_i)_n / (prod (b_j)_n * n!).
struct HypergeomSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational scale = 1;

  friend bool operator==(const HypergeomSpec&, const HypergeomSpec&) = default;
};

// "3F2([2/9,5/9,8/9],[2/3,1];27)". The scale may be a product of powers, e.g. "27*7^3".
HypergeomSpec parse_hypergeom(const std::string& text);
std::string to_string(const HypergeomSpec& spec);
// Throws ValidationError when a lower parameter is a non-positive integer.
void check_spec(const HypergeomSpec& spec);
UniSeries hyp_series(const HypergeomSpec& spec, std::size_t N);

// Height with the counting convention used throughout: the lower list is
// completed by b_p = 1 when it has p-1 entries; then
//   h = #{integer b_j} - #{integer a_i} - #{non-integer b_j}.
// Each non-integer lower parameter is paired with one integer lower parameter
// inside a single height-one factor, which is why it is subtracted.
long height(const HypergeomSpec& spec);
// The bare count #{integer b_j} - #{integer a_i} with b_p = 1 completed.
long height_raw(const HypergeomSpec& spec);

// The (a,b) family of 3F2 series: diagonals of (1-x-y)^(a/b)/(1-x-y-z).
HypergeomSpec family_spec(long a, long b);
Rational closed_form_S(long a, long b, unsigned n);
Rational coefficient_sum_oracle(long a, long b, unsigned n);
bool chu_vandermonde_check(long n, long k);

// Operator sum_k P[k](x) * D_x^k.
struct ODE {
  std::vector<MPoly> P;
  std::size_t order() const { return P.empty() ? 0 : P.size() - 1; }
};

// The family operator with symbolic a, b (polynomials over variables a, b, x).
ODE ode_family_symbolic();
ODE ode_family(long a, long b);
// Coefficients 0..order(f) - order(ode) of the operator applied to f.
UniSeries ode_apply(const ODE& ode, const UniSeries& f);

// sum_i Q[i] * S(n + i) = 0.
struct Recurrence {
  std::vector<MPoly> Q;
  std::size_t order() const { return Q.empty() ? 0 : Q.size() - 1; }
};

// The first-order family recurrence over variables a, b, n.
Recurrence family_recurrence_symbolic();
Recurrence family_recurrence(long a, long b);
bool recurrence_verify_symbolic();
// Q-multiples of each other as rational functions of n (2x2 minors vanish).
bool proportional(const Recurrence& r, const Recurrence& s);

struct BoundedWitness {
  Integer c;
  Integer d;
};
// Smallest c (then smallest d <= dMax) with d*f(c*x) integral through the
// truncation order; nullopt means not found within the bounds.
std::optional<BoundedWitness> globally_bounded_witness(const UniSeries& f, const Integer& cMax, const Integer& dMax);

struct PrimeEvidence {
  Integer prime;
  std::size_t first_index;
};
struct BoundednessVerdict {
  bool likely_unbounded = false;
  // Primes above the bound, with the first index where they divide a denominator.
  std::vector<PrimeEvidence> evidence;
};
BoundednessVerdict gb_heuristic(const HypergeomSpec& spec, std::size_t N, unsigned long prime_bound);

struct FactorizationEntry {
  std::string decomposition;
  HypergeomSpec tested_factor;
  bool identity_holds = false;
  BoundednessVerdict verdict;
};
struct FactorizationReport {
  std::vector<FactorizationEntry> entries;
  bool route_found = false;
};
FactorizationReport hadamard_factorizations(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                                            std::size_t N = 60, unsigned long prime_bound = 10);

// Prime factorization by trial division plus a probable-prime test on the cofactor.
std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n);

}  // namespace diag
