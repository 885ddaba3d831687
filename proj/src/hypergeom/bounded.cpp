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


#include <algorithm>
#include <map>

#include "diag/errors.hpp"
#include "diag/hypergeom.hpp"

namespace diag {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 1u << 17;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Pollard rho (Brent variant would be faster; cofactors here are rare and small).
Integer rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Integer d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n0) {
  Integer n = abs(n0);
  if (n == 0) throw InputError("cannot factor zero");
  std::map<Integer, unsigned long> found;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned long k = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++k;
      }
      found[Integer(p)] = k;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::optional<BoundedWitness> globally_bounded_witness(const UniSeries& f, const Integer& cMax, const Integer& dMax) {
  // Primes that can matter are those dividing some denominator.
  std::map<Integer, bool> primes;
  for (const auto& q : f.c)
    if (sgn(q) != 0)
      for (const auto& [p, k] : factor_integer(q.get_den())) primes[p] = true;
  std::optional<BoundedWitness> best;
  for (Integer d = 1; d <= dMax; ++d) {
    Integer c = 1;
    bool ok = true;
    for (const auto& [p, unused] : primes) {
      unsigned long pp = p.get_ui();
      long vd = valuation(d, pp);
      long need = 0;
      for (std::size_t n = 0; n < f.c.size() && ok; ++n) {
        if (sgn(f.c[n]) == 0) continue;
        long deficit = -valuation(f.c[n], pp) - vd;  // needs n * e >= deficit
        if (deficit <= 0) continue;
        if (n == 0) {
          ok = false;
        } else {
          need = std::max(need, static_cast<long>((deficit + static_cast<long>(n) - 1) / static_cast<long>(n)));
        }
      }
      if (!ok) break;
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(need));
      c *= pe;
      if (c > cMax) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!best || c < best->c) best = BoundedWitness{c, d};
    if (best->c == 1) break;
  }
  return best;
}

BoundednessVerdict gb_heuristic(const HypergeomSpec& spec, std::size_t N, unsigned long prime_bound) {
  UniSeries s = hyp_series(spec, N);
  std::map<Integer, std::size_t> first;
  for (std::size_t n = 0; n <= N; ++n) {
    if (sgn(s.c[n]) == 0) continue;
    for (const auto& [p, k] : factor_integer(s.c[n].get_den()))
      if (p > prime_bound && !first.count(p)) first[p] = n;
  }
  BoundednessVerdict v;
  for (const auto& [p, n] : first) {
    v.evidence.push_back({p, n});
    if (2 * n > N) v.likely_unbounded = true;
  }
  std::sort(v.evidence.begin(), v.evidence.end(),
            [](const PrimeEvidence& x, const PrimeEvidence& y) { return x.first_index < y.first_index; });
  return v;
}

FactorizationReport hadamard_factorizations(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                                            std::size_t N, unsigned long prime_bound) {
  for (const auto* q : {&a, &b, &c, &e})
    if (is_integer(*q))
      throw ValidationError(ValidationError::Kind::degenerate_parameters, "parameters must be non-integers");
  HypergeomSpec whole{{a, b, c}, {Rational(1), e}, 1};
  UniSeries target = hyp_series(whole, N);
  auto name = [](const Rational& q) { return to_string(q); };
  struct Split {
    HypergeomSpec tested, other;
    std::string text;
  };
  std::vector<Split> splits;
  const Rational* params[3] = {&a, &b, &c};
  // 2F1([x,y],[e]) * 1F0([z])
  for (int drop = 2; drop >= 0; --drop) {
    std::vector<Rational> pair;
    for (int i = 0; i < 3; ++i)
      if (i != drop) pair.push_back(*params[i]);
    const Rational& z = *params[drop];
    splits.push_back({HypergeomSpec{pair, {e}, 1}, HypergeomSpec{{z}, {}, 1},
                      "2F1([" + name(pair[0]) + "," + name(pair[1]) + "],[" + name(e) + "]) * 1F0([" + name(z) + "])"});
  }
  // 2F1([x,y],[1]) * 2F1([z,1],[e])
  for (int drop = 2; drop >= 0; --drop) {
    std::vector<Rational> pair;
    for (int i = 0; i < 3; ++i)
      if (i != drop) pair.push_back(*params[i]);
    const Rational& z = *params[drop];
    splits.push_back({HypergeomSpec{{z, Rational(1)}, {e}, 1}, HypergeomSpec{pair, {Rational(1)}, 1},
                      "2F1([" + name(pair[0]) + "," + name(pair[1]) + "],[1]) * 2F1([" + name(z) + ",1],[" + name(e) +
                          "])"});
  }
  FactorizationReport rep;
  for (const auto& s : splits) {
    FactorizationEntry en;
    en.decomposition = s.text;
    en.tested_factor = s.tested;
    en.identity_holds = hadamard(hyp_series(s.tested, N), hyp_series(s.other, N)) == target;
    en.verdict = gb_heuristic(s.tested, N, prime_bound);
    if (en.identity_holds && !en.verdict.likely_unbounded) rep.route_found = true;
    rep.entries.push_back(std::move(en));
  }
  return rep;
}

}  // namespace diag
