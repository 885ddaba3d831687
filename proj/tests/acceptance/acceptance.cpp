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


// One PASS/FAIL line per acceptance criterion. Usage: acceptance [--only N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "diag/denef_lipshitz.hpp"
#include "diag/errors.hpp"
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "diag/identity.hpp"
#include "diag/modp.hpp"
#include "diag/series.hpp"
#include "diag/zeilberger.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace diag;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << "first failure: " << what << "; ";
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

const char* kRunning = "(1-x-y)^(1/3)/(1-x-y-z)";
const std::vector<std::string> kXYZ{"x", "y", "z"};

// Valid family members: a/b positive, not an integer.
const std::vector<std::pair<long, long>> kGrid{{1, 3}, {2, 3}, {1, 7}, {3, 4}, {1, 2}, {1, 4}, {1, 5},
                                               {2, 5}, {3, 5}, {5, 6}, {2, 7}, {4, 9}, {7, 8}};

UniSeries family_diagonal(long a, long b, std::uint32_t N) {
  auto e = parse_validated("(1-x-y)^(" + std::to_string(a) + "/" + std::to_string(b) + ")/(1-x-y-z)", kXYZ);
  return diagonal(expand(e, {N, N, N}));
}

void c1(Outcome& o) {
  struct Row {
    long a, b;
    const char* scaled;
    long c1, c2;
  };
  for (auto row : {Row{1, 3, "3F2([2/9,5/9,8/9],[2/3,1];729)", 120, 47124},
                   Row{2, 3, "3F2([1/9,4/9,7/9],[1/3,1];729)", 84, 32760}}) {
    auto d = family_diagonal(row.a, row.b, 10);
    o.expect(d.c == hyp_series(family_spec(row.a, row.b), 10).c, "diagonal equals family series");
    for (unsigned n = 0; n <= 10; ++n)
      o.expect(d.c[n] == oracle::diag_family_coeff(make_rational(row.a, row.b), n), "diagonal equals binomial sum");
    auto s = rescale(d, Rational(27));
    o.expect(s.c == hyp_series(parse_hypergeom(row.scaled), 10).c, "x -> 27x gives the 729-scaled series");
    o.expect(s.c[1] == row.c1 && s.c[2] == row.c2, "integer coefficients 1 and 2");
    o.note << "(" << row.a << "," << row.b << ") scaled: 1, " << to_string(s.c[1]) << ", " << to_string(s.c[2])
           << "; ";
  }
}

void c2(Outcome& o) {
  auto e = parse_validated(kRunning, kXYZ);
  auto d = dl_full(e);
  auto printed = to_rational_function(
      parse_expr("3*f^2*(f+1)^2*(x*f+y*f+z*f-1)^3/((f+1)^3*(x*f+y*f+z*f-1)^3 - x*f - y*f + 1) + 1",
                 {"x", "y", "z", "f"}));
  o.expect(equivalent(d.r_single.rebase(printed.variables()), printed), "single-step r equals the displayed r");
  o.expect(d.r.variables().size() == 6, "six variables");
  auto diag6 = dl_diagonal(d, 5);
  o.expect(diag6.c == hyp_series(family_spec(1, 3), 5).c, "six-variable diagonal equals family series");
  o.expect(dl_reconstruct(d, {3, 3, 3}) == expand(e, {3, 3, 3}), "partial diagonal reconstruction");
  o.note << "r has " << d.r.num.size() << " numerator terms; ";
}

void c3(Outcome& o) {
  int pairs = 0;
  for (auto [a, b] : kGrid) {
    auto h = hyp_series(family_spec(a, b), 12);
    for (unsigned n = 0; n <= 12; ++n) {
      Rational s = coefficient_sum_oracle(a, b, n);
      o.expect(s == closed_form_S(a, b, n), "oracle equals closed form");
      o.expect(s == h.c[n], "closed form equals hypergeometric coefficient");
    }
    ++pairs;
  }
  o.expect(pairs >= 12, "grid size");
  o.expect(closed_form_S(1, 7, 1) == make_rational(260, 49), "(1,7) coefficient 1");
  o.expect(closed_form_S(1, 7, 2) == make_rational(188190, 2401), "(1,7) coefficient 2");
  o.expect(closed_form_S(3, 4, 1) == make_rational(45, 16), "(3,4) coefficient 1");
  o.expect(closed_form_S(3, 4, 2) == make_rational(41769, 1024), "(3,4) coefficient 2");
  o.note << pairs << " pairs, n <= 12; ";
}

void c4(Outcome& o) {
  o.expect(recurrence_verify_symbolic(), "symbolic recurrence identity");
  auto t = family_summand(1, 3);
  auto z = zeilberger(t);
  o.expect(z.rec.order() == 1, "first-order telescoper");
  o.expect(proportional(z.rec, family_recurrence(1, 3)), "unit multiple of the family recurrence");
  o.expect(certificate_verify(t, z.rec, z.cert, default_grid(t, z.rec, z.cert, 15, 49), 15), "certificate");
  for (long n = 0; n <= 15; ++n) o.expect(t.sum(n) == closed_form_S(1, 3, n), "brute-force sums");
}

void c5(Outcome& o) {
  for (auto [a, b] : kGrid) {
    auto ode = ode_family(a, b);
    auto res = ode_apply(ode, hyp_series(family_spec(a, b), 45 + ode.order()));
    bool zero = res.order() >= 45;
    for (const auto& c : res.c) zero = zero && c == 0;
    o.expect(zero, "ODE annihilates (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  o.note << kGrid.size() << " pairs through degree 45; ";
}

const char* kSpec = "3F2([1/9,4/9,5/9],[1/3,1];729)";

void c6(Outcome& o) {
  auto F = hyp_series_mod(parse_hypergeom(kSpec), 2, 1, 600000);
  std::vector<std::size_t> expect{0,      2,      128,    130,    8192,   8194,   8320,   8322,
                                  524288, 524290, 524416, 524418, 532480, 532482, 532608, 532610};
  o.expect(F.support() == expect, "sixteen-element support");
  auto g = guess_mahler(F, 10, 16);
  o.expect(g && g->kind == FunctionalEq::Kind::multiplicative && g->q() == 64 && g->A == ModPoly{1, 0, 1},
           "Multiplicative(64, 1+x^2)");
  if (g) {
    o.expect(verify_relation(F, *g, 600000).ok, "verified at 600000");
    o.note << g->to_string() << "; ";
  }
}

void c7(Outcome& o) {
  const std::size_t N = 19683;
  auto F = hyp_series_mod(parse_hypergeom(kSpec), 3, 2, N);
  auto G = derived_series(F, 1, make_rational(1, 2));
  auto G3 = pow_trunc(G, 3, N);
  bool ok = true;
  for (std::size_t n = 0; n <= N; ++n) ok = ok && G.c[n] == (G3.c[n] + (n == 1 ? 1 : 0)) % 3;
  o.expect(ok, "G = x + G^3 mod 3");
  FunctionalEq eq;
  eq.kind = FunctionalEq::Kind::affine;
  eq.p = 3;
  eq.s = 1;
  eq.A = {0, 1};
  o.expect(verify_relation(G, eq, N).ok, "G(x) = x + G(x^3)");
  o.note << "support size " << G.support().size() << " through degree " << N << "; ";
}

void c8(Outcome& o) {
  auto reports = run_cases(builtin_suite(), 1);
  int matched = 0, recorded = 0;
  for (const auto& r : reports) {
    o.expect(r.error.empty(), r.name + " raised " + r.error);
    o.expect(!r.failed(), r.name + " expected to match");
    if (r.expect == Expect::match) ++matched;
    else {
      ++recorded;
      if (r.mismatch) o.note << r.name << " differs at x^" << r.mismatch->index << "; ";
    }
  }
  auto fx = fixture_report(1, 3, 4);
  o.expect(fx.error.empty() && fx.expect == Expect::report, "fixture produces a report");
  if (fx.mismatch) o.note << fx.name << " differs at x^" << fx.mismatch->index << "; ";
  o.note << matched << " proved cases match, " << recorded << " recorded; ";
}

void c9(Outcome& o) {
  for (auto s : {"3F2([2/9,5/9,8/9],[2/3,1];1)", "3F2([1/9,4/9,7/9],[1/3,1];1)"}) {
    auto w = globally_bounded_witness(hyp_series(parse_hypergeom(s), 40), 100000, 1000);
    o.expect(w && w->c == 729 && w->d == 1, std::string("witness (729,1) for ") + s);
  }
  for (auto s : {"2F1([2/9,5/9],[2/3];1)", "2F1([2/9,8/9],[2/3];1)", "2F1([5/9,8/9],[2/3];1)",
                 "2F1([1/9,4/9],[1/3];1)", "2F1([4/9,7/9],[1/3];1)", "2F1([1/9,7/9],[1/3];1)"})
    o.expect(gb_heuristic(parse_hypergeom(s), 60, 10).likely_unbounded, std::string("likely unbounded ") + s);
}

void c10(Outcome& o) {
  int points = 0;
  std::vector<std::pair<const char*, prop::Run>> runs{
      {"ring", prop::ring_laws(1001, 120)},         {"hadamard", prop::hadamard_laws(1002, 120)},
      {"frobenius", prop::frobenius(1003, 120)},    {"compose", prop::compose_vs_naive(1004, 120)},
      {"doubling", prop::doubling(1005, 120, &points)}};
  for (const auto& [name, r] : runs) {
    o.expect(r.cases >= 100, std::string(name) + " case count");
    o.expect(r.failures == 0, std::string(name) + ": " + r.first);
    o.note << name << " " << r.cases << "/" << r.failures << " ";
  }
  o.expect(points >= 100, "doubling evaluation points");
  o.note << "(cases/failures); ";
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  std::vector<Criterion> all{
      {1, "family diagonals equal the 3F2 series", 30, c1},
      {2, "algebraic-to-rational construction end to end", 600, c2},
      {3, "closed form chain on the parameter grid", 0, c3},
      {4, "recurrence and creative telescoping", 0, c4},
      {5, "ODE annihilates the family series", 0, c5},
      {6, "mod 2 support and Mahler relation", 60, c6},
      {7, "mod 3 relation G = x + G^3", 60, c7},
      {8, "identity suite", 0, c8},
      {9, "global boundedness witnesses and heuristic", 0, c9},
      {10, "randomized property suites", 0, c10},
  };
  int failed = 0, ran = 0;
  for (auto& c : all) {
    if (only && c.id != only) continue;
    ++ran;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what() << "; ";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s > c.budget_s) {
      o.ok = false;
      o.note << "over the " << c.budget_s << " s budget; ";
    }
    if (!o.ok) ++failed;
    std::string note = o.note.str();
    if (note.size() >= 2) note.resize(note.size() - 2);
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, s,
                note.empty() ? "" : " :: ", note.c_str());
    std::fflush(stdout);
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failed ? 1 : 0;
}
