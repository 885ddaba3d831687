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


#include <map>
#include <sstream>

#include "diag/errors.hpp"
#include "diag/zeilberger.hpp"
#include "solve.hpp"

namespace diag {

namespace {

using KPoly = Poly<RatFun>;

// The monic-in-k form k + cn*n + c0.
struct KForm {
  Rational cn, c0;
  friend bool operator<(const KForm& a, const KForm& b) {
    if (a.cn != b.cn) return a.cn < b.cn;
    return a.c0 < b.c0;
  }
  KForm shifted(long j) const { return {cn, c0 + j}; }
  KPoly poly() const { return KPoly::linear(RatFun(QPoly(std::vector<Rational>{c0, cn}))); }
};

// coeff(n) * prod form^count; positive counts in the numerator.
struct Split {
  RatFun coeff = RatFun(1L);
  std::map<KForm, long> count;
};

void add_count(std::map<KForm, long>& m, const KForm& f, long c) {
  long& v = m[f];
  v += c;
  if (v == 0) m.erase(f);
}

Split split(const FactoredRatio& r) {
  Split s;
  s.coeff = RatFun(r.constant);
  auto one = [&](const LinearForm& f, bool num) {
    if (f.ck != 0) {
      RatFun lead(f.ck);
      s.coeff = num ? s.coeff * lead : s.coeff / lead;
      add_count(s.count, KForm{f.cn / f.ck, f.c0 / f.ck}, num ? 1 : -1);
    } else {
      RatFun v(QPoly(std::vector<Rational>{f.c0, f.cn}));
      s.coeff = num ? s.coeff * v : s.coeff / v;
    }
  };
  for (const auto& f : r.num) one(f, true);
  for (const auto& f : r.den) one(f, false);
  return s;
}

FactoredRatio shift_n(const FactoredRatio& r, long j) {
  FactoredRatio o;
  o.constant = r.constant;
  for (const auto& f : r.num) o.num.push_back(f.shift_n(j));
  for (const auto& f : r.den) o.den.push_back(f.shift_n(j));
  return o;
}

// t(n+i,k)/t(n,k) as factored ratios for i = 0..J.
std::vector<FactoredRatio> shift_ratios(const HyperTerm& t, std::size_t J) {
  FactoredRatio nr = t.n_ratio();
  std::vector<FactoredRatio> rho(1);
  for (std::size_t i = 1; i <= J; ++i) {
    FactoredRatio next = rho.back();
    FactoredRatio s = shift_n(nr, static_cast<long>(i - 1));
    next.constant *= s.constant;
    next.num.insert(next.num.end(), s.num.begin(), s.num.end());
    next.den.insert(next.den.end(), s.den.begin(), s.den.end());
    rho.push_back(std::move(next));
  }
  return rho;
}

KPoly product(const std::map<KForm, long>& m, bool positive) {
  KPoly p(RatFun(1L));
  for (const auto& [f, c] : m) {
    long e = positive ? c : -c;
    for (long i = 0; i < e; ++i) p = p * f.poly();
  }
  return p;
}

KPoly product_of(const std::vector<KForm>& v) {
  KPoly p(RatFun(1L));
  for (const auto& f : v) p = p * f.poly();
  return p;
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  QPoly g = QPoly::gcd(a, b);
  return QPoly::divmod(a * b, g).first.monic();
}

// Rational content and denominator-lcm of a QPoly.
Integer coeff_den_lcm(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}
Integer coeff_num_gcd(const QPoly& p) {
  Integer g = 0;
  for (const auto& c : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

MPoly to_mpoly_n(const QPoly& p) {
  MPoly m({"n"});
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) m.add_term({static_cast<std::uint32_t>(i)}, p.c[i]);
  return m;
}

// Clears Q(n) denominators of num/den over Q(n)[k] and returns integer
// bivariate polynomials without common content.
Certificate to_certificate(KPoly num, KPoly den) {
  Certificate cert;
  std::vector<std::string> nk = {"n", "k"};
  if (num.is_zero()) {
    cert.num = MPoly(nk);
    cert.den = MPoly::constant(nk, 1);
    return cert;
  }
  KPoly g = KPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = KPoly::divmod(num, g).first;
    den = KPoly::divmod(den, g).first;
  }
  QPoly L(Rational(1));
  for (const auto* p : {&num, &den})
    for (const auto& c : p->c) L = lcm(L, c.den());
  std::vector<QPoly> nc, dc;
  for (const auto& c : num.c) nc.push_back(QPoly::divmod(c.num() * L, c.den()).first);
  for (const auto& c : den.c) dc.push_back(QPoly::divmod(c.num() * L, c.den()).first);
  QPoly G;
  for (const auto* v : {&nc, &dc})
    for (const auto& c : *v)
      if (!c.is_zero()) G = G.is_zero() ? c.monic() : QPoly::gcd(G, c);
  Integer dl = 1, ng = 0;
  for (auto* v : {&nc, &dc})
    for (auto& c : *v) {
      if (c.is_zero()) continue;
      c = QPoly::divmod(c, G).first;
      mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), coeff_den_lcm(c).get_mpz_t());
    }
  for (auto* v : {&nc, &dc})
    for (auto& c : *v) {
      c = c * Rational(dl);
      Integer g2 = coeff_num_gcd(c);
      if (g2 != 0) mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), g2.get_mpz_t());
    }
  Rational scale = Rational(1) / Rational(ng);
  if (!dc.empty() && dc.back().lead() < 0) scale = -scale;
  auto build = [&](const std::vector<QPoly>& v) {
    MPoly m(nk);
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t i = 0; i < v[j].c.size(); ++i)
        if (v[j].c[i] != 0)
          m.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, v[j].c[i] * scale);
    return m;
  };
  cert.num = build(nc);
  cert.den = build(dc);
  return cert;
}

struct Attempt {
  std::vector<RatFun> sigma;
  KPoly R_num, R_den;
};

std::optional<Attempt> try_order(const HyperTerm& term, std::size_t J) {
  std::vector<FactoredRatio> rho = shift_ratios(term, J);
  std::vector<Split> rs;
  for (const auto& r : rho) rs.push_back(split(r));
  // Q: least common multiple of the k-dependent denominators.
  std::map<KForm, long> Q;
  for (const auto& s : rs)
    for (const auto& [f, c] : s.count)
      if (c < 0) Q[f] = std::max(Q[f], -c);
  std::vector<KPoly> P;
  for (const auto& s : rs) {
    std::map<KForm, long> m = Q;
    for (const auto& [f, c] : s.count) add_count(m, f, c);
    P.push_back(product(m, true) * s.coeff);
  }
  // k-ratio of t/Q.
  Split kr = split(term.k_ratio());
  for (const auto& [f, c] : Q) {
    add_count(kr.count, f, c);
    add_count(kr.count, f.shifted(1), -c);
  }
  // Gosper-Petkovsek form over linear factors.
  std::vector<KForm> A, B, C;
  for (const auto& [f, c] : kr.count)
    for (long i = 0; i < std::abs(c); ++i) (c > 0 ? A : B).push_back(f);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < A.size() && !changed; ++i)
      for (std::size_t j = 0; j < B.size() && !changed; ++j) {
        if (A[i].cn != B[j].cn) continue;
        Rational h = A[i].c0 - B[j].c0;
        if (!is_integer(h) || h <= 0) continue;
        KForm g = B[j];
        for (long s = 0; s < detail::to_long(h); ++s) C.push_back(g.shifted(s));
        A.erase(A.begin() + static_cast<long>(i));
        B.erase(B.begin() + static_cast<long>(j));
        changed = true;
      }
  }
  KPoly a = product_of(A) * kr.coeff;
  std::vector<KForm> Bm1;
  for (const auto& f : B) Bm1.push_back(f.shifted(-1));
  KPoly bm1 = product_of(Bm1);
  KPoly c0 = product_of(C);
  std::vector<KPoly> rhs;
  for (const auto& p : P) rhs.push_back(c0 * p);
  auto sol = detail::solve_gosper<RatFun>(a, bm1, rhs);
  if (!sol) return std::nullopt;
  Attempt at;
  at.sigma = sol->sigma;
  at.R_num = bm1 * sol->x;
  at.R_den = c0 * product(Q, true);
  return at;
}

}  // namespace

Rational Certificate::eval(const Rational& n, const Rational& k) const {
  Rational d = den.evaluate({n, k});
  if (d == 0) throw AlgorithmError("PoleOnGrid: certificate pole at n=" + diag::to_string(n) + ", k=" + diag::to_string(k));
  return num.evaluate({n, k}) / d;
}

std::string Certificate::to_string() const { return "(" + num.to_string() + ")/(" + den.to_string() + ")"; }

ZeilbergerResult zeilberger(const HyperTerm& term, std::size_t max_order) {
  for (std::size_t J = 1; J <= max_order; ++J) {
    auto at = try_order(term, J);
    if (!at) continue;
    // Normalize: primitive integer polynomials, positive leading coefficient of sigma_J.
    QPoly L(Rational(1));
    for (const auto& s : at->sigma) L = lcm(L, s.den());
    std::vector<QPoly> sp;
    for (const auto& s : at->sigma) sp.push_back(QPoly::divmod(s.num() * L, s.den()).first);
    QPoly G;
    for (const auto& p : sp)
      if (!p.is_zero()) G = G.is_zero() ? p.monic() : QPoly::gcd(G, p);
    Integer dl = 1, ng = 0;
    for (auto& p : sp) {
      if (p.is_zero()) continue;
      p = QPoly::divmod(p, G).first;
      mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), coeff_den_lcm(p).get_mpz_t());
    }
    for (auto& p : sp) {
      p = p * Rational(dl);
      Integer g = coeff_num_gcd(p);
      if (g != 0) mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), g.get_mpz_t());
    }
    Rational c = Rational(dl) / Rational(ng);
    std::size_t top = sp.size();
    while (top > 0 && sp[top - 1].is_zero()) --top;
    if (top == 0) continue;
    if (sp[top - 1].lead() * Rational(1) < 0) c = -c;
    // Overall multiplier lambda(n) = c * L / G applied to sigma and R.
    RatFun lambda = RatFun(L * c, G);
    ZeilbergerResult res;
    for (const auto& s : at->sigma) res.rec.Q.push_back(to_mpoly_n(((s * lambda).num())));
    res.cert = to_certificate(at->R_num * lambda, at->R_den);
    return res;
  }
  throw AlgorithmError("OrderExceeded: no recurrence of order <= " + std::to_string(max_order));
}

namespace {

// Throws PoleOnGrid when a denominator vanishes at the point.
bool identity_at(const std::vector<FactoredRatio>& rho, const FactoredRatio& kr, const Recurrence& rec,
                 const Certificate& cert, long n, long k) {
  Rational N(n), K(k);
  Rational lhs = 0;
  for (std::size_t i = 0; i < rec.Q.size(); ++i) lhs += rec.Q[i].evaluate({N}) * rho[i].eval(N, K);
  Rational rhs = cert.eval(N, K + 1) * kr.eval(N, K) - cert.eval(N, K);
  return lhs == rhs;
}

}  // namespace

bool certificate_verify(const HyperTerm& term, const Recurrence& rec, const Certificate& cert,
                        const std::vector<GridPoint>& grid, long n_max) {
  if (rec.Q.empty()) throw ValidationError(ValidationError::Kind::bad_argument, "empty recurrence");
  auto rho = shift_ratios(term, rec.order());
  FactoredRatio kr = term.k_ratio();
  for (const auto& p : grid)
    if (!identity_at(rho, kr, rec, cert, p.n, p.k)) return false;
  std::vector<Rational> S;
  for (long n = 0; n <= n_max + static_cast<long>(rec.order()); ++n) S.push_back(term.sum(n));
  for (long n = 0; n <= n_max; ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i < rec.Q.size(); ++i) acc += rec.Q[i].evaluate({Rational(n)}) * S[static_cast<std::size_t>(n) + i];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<GridPoint> default_grid(const HyperTerm& term, const Recurrence& rec, const Certificate& cert,
                                    long n_max, long k_max) {
  auto rho = shift_ratios(term, rec.order());
  FactoredRatio kr = term.k_ratio();
  std::vector<GridPoint> grid;
  for (long n = 0; n <= n_max; ++n)
    for (long k = -2; k <= k_max; ++k) {
      try {
        identity_at(rho, kr, rec, cert, n, k);
      } catch (const AlgorithmError&) {
        continue;
      }
      grid.push_back({n, k});
    }
  return grid;
}

}  // namespace diag
