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


// Randomized algebraic laws shared by the unit tests and the acceptance runner.

#pragma once

#include <functional>
#include <random>
#include <string>

#include "diag/denef_lipshitz.hpp"
#include "diag/kernels.hpp"
#include "diag/modp.hpp"
#include "diag/series.hpp"
#include "oracles.hpp"

namespace prop {

using namespace diag;

struct Run {
  int cases = 0;
  int failures = 0;
  std::string first;  // first failing check

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!failures) first = what + " (case " + std::to_string(cases) + ")";
    ++failures;
  }
};

inline MultiSeries random_multi(std::mt19937_64& rng, const std::vector<std::uint32_t>& box, Layout layout) {
  MultiSeries s({"x", "y"}, box, layout);
  for (std::uint32_t i = 0; i <= box[0]; ++i)
    for (std::uint32_t j = 0; j <= box[1]; ++j)
      if (rng() % 3) s.set({i, j}, oracle::random_rational(rng));
  return s;
}

inline UniSeries random_uni(std::mt19937_64& rng, std::size_t N, bool zero_constant = false) {
  UniSeries f;
  for (std::size_t n = 0; n <= N; ++n) f.c.push_back(oracle::random_rational(rng));
  if (zero_constant) f.c[0] = 0;
  return f;
}

inline UniSeries scaled(const UniSeries& f, const Rational& a) {
  UniSeries g = f;
  for (auto& v : g.c) v *= a;
  return g;
}

inline MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, const Rational& constant) {
  MPoly p(vars);
  p.add_term(Exponent(vars.size(), 0), constant);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars.size(), 0);
    for (auto& d : e) d = static_cast<std::uint32_t>(rng() % 3);
    if (e == Exponent(vars.size(), 0)) e[0] = 1;
    p.add_term(e, oracle::random_rational(rng));
  }
  return p;
}

// Naive p-th power over Z/p by repeated schoolbook products.
inline std::vector<std::uint64_t> naive_pow(const std::vector<std::uint64_t>& f, std::uint64_t p, std::size_t N) {
  std::vector<std::uint64_t> acc(N + 1, 0);
  acc[0] = 1;
  for (std::uint64_t k = 0; k < p; ++k) {
    std::vector<std::uint64_t> next(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i)
      for (std::size_t j = 0; i + j <= N; ++j) next[i + j] = (next[i + j] + acc[i] * f[j]) % p;
    acc = next;
  }
  return acc;
}

inline Run ring_laws(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Run run;
  for (; run.cases < n; ++run.cases) {
    std::vector<std::uint32_t> box{static_cast<std::uint32_t>(1 + rng() % 4), static_cast<std::uint32_t>(1 + rng() % 4)};
    Layout lay = run.cases % 2 ? Layout::dense : Layout::sparse;
    auto a = random_multi(rng, box, lay), b = random_multi(rng, box, lay), c = random_multi(rng, box, lay);
    run.expect(a + b == b + a, "a+b = b+a");
    run.expect(a * b == b * a, "ab = ba");
    run.expect((a + b) + c == a + (b + c), "additive associativity");
    run.expect((a * b) * c == a * (b * c), "multiplicative associativity");
    run.expect(a * (b + c) == a * b + a * c, "distributivity");
    run.expect(a - a == a * Rational(0), "a-a = 0");
    run.expect(a * constant_series(a.variables(), box, 1) == a, "unit");
    run.expect((a.with_layout(Layout::dense) * b.with_layout(Layout::sparse)).with_layout(Layout::dense) ==
                   (a * b).with_layout(Layout::dense),
               "dense and sparse layouts agree");
    auto u = b;
    u.set(Exponent{0, 0}, Rational(1));
    run.expect(divide(a * u, u) == a, "division inverts multiplication");
  }
  return run;
}

inline Run hadamard_laws(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Run run;
  for (; run.cases < n; ++run.cases) {
    std::size_t N = 1 + rng() % 12;
    auto f = random_uni(rng, N), g = random_uni(rng, N), h = random_uni(rng, N);
    Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
    run.expect(hadamard(uni_add(scaled(f, a), scaled(g, b)), h) ==
                   uni_add(scaled(hadamard(f, h), a), scaled(hadamard(g, h), b)),
               "bilinearity");
    run.expect(hadamard(hadamard(f, g), h) == hadamard(f, hadamard(g, h)), "associativity");
    run.expect(hadamard(f, g) == hadamard(g, f), "commutativity");
    bool termwise = true;
    auto fg = hadamard(f, g);
    for (std::size_t i = 0; i <= N; ++i) termwise = termwise && fg.c[i] == f.c[i] * g.c[i];
    run.expect(termwise, "termwise product");
  }
  return run;
}

inline Run compose_vs_naive(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Run run;
  for (; run.cases < n; ++run.cases) {
    std::size_t N = 1 + rng() % 9;
    auto f = random_uni(rng, N), g = random_uni(rng, N, true);
    run.expect(compose(f, g).c == oracle::compose_naive(f.c, g.c, N + 1), "compose matches brute force");
  }
  return run;
}

inline Run frobenius(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  Run run;
  for (; run.cases < n; ++run.cases) {
    std::uint64_t p = primes[rng() % 6];
    std::size_t N = 1 + rng() % 60;
    ModPSeries F;
    F.p = p;
    F.r = 1;
    F.c.resize(N + 1);
    for (auto& v : F.c) v = rng() % p;
    run.expect(frobenius_self_test(F), "self-test");
    auto sub = frobenius_substitute(F, p, N);
    run.expect(sub.c == naive_pow(F.c, p, N), "F(x^p) = F^p by schoolbook powers");
    run.expect(pow_trunc(F, p, N).c == sub.c, "pow_trunc agrees");
  }
  return run;
}

// (u r(u) - v r(v)) / (u - v) at random points, and no factor vanishing on u = v.
inline Run doubling(std::uint64_t seed, int n, int* points = nullptr) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> vars{"x", "t"};
  Run run;
  int checked = 0;
  for (; run.cases < n; ++run.cases) {
    RationalFunction r(random_poly(rng, vars, oracle::random_rational(rng)), {random_poly(rng, vars, Rational(1))});
    auto d = dl_double(r, "t", "u", "v");
    run.expect(d.variables() == std::vector<std::string>{"x", "u", "v"}, "variable order");
    std::vector<std::string> xu{"x", "u"};
    for (const auto& f : d.den)
      run.expect(!f.substitute({MPoly::variable(xu, "x"), MPoly::variable(xu, "u"), MPoly::variable(xu, "u")}).is_zero(),
                 "exact division by u - v");
    for (int k = 0; k < 3; ++k) {
      Rational x = oracle::random_rational(rng), u = oracle::random_rational(rng), v = oracle::random_rational(rng);
      if (u == v) continue;
      Rational ru, rv, got;
      try {
        ru = r.evaluate({x, u});
        rv = r.evaluate({x, v});
        got = d.evaluate({x, u, v});
      } catch (const std::exception&) {
        continue;
      }
      run.expect(got == (u * ru - v * rv) / (u - v), "pointwise divided difference");
      ++checked;
    }
  }
  if (points) *points = checked;
  return run;
}

inline Run kernels_agree(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Run run;
  for (; run.cases < n; ++run.cases) {
    std::size_t len = rng() % 90;
    std::uint64_t m = 2 + rng() % 1000000;
    std::vector<std::uint64_t> a(len), b(len), src(len);
    for (std::size_t i = 0; i < len; ++i) a[i] = b[i] = rng() % m, src[i] = rng() % m;
    std::uint64_t s = rng() % m;
    kernels::scalar::axpy_mod(a.data(), src.data(), len, s, m);
    if (!kernels::avx2::supported()) continue;
    kernels::avx2::axpy_mod(b.data(), src.data(), len, s, m);
    run.expect(a == b, "axpy_mod");
    run.expect(kernels::avx2::first_mismatch(a.data(), src.data(), len) ==
                   kernels::scalar::first_mismatch(a.data(), src.data(), len),
               "first_mismatch");
  }
  return run;
}

}  // namespace prop
