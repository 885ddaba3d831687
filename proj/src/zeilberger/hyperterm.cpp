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
#include <cctype>
#include <map>
#include <sstream>

#include "diag/errors.hpp"
#include "diag/zeilberger.hpp"

namespace diag {

namespace {

const std::vector<std::string> kNK = {"n", "k"};

MPoly form_poly(const LinearForm& f) {
  MPoly p = MPoly::constant(kNK, f.c0);
  p += MPoly::variable(kNK, "n") * f.cn;
  p += MPoly::variable(kNK, "k") * f.ck;
  return p;
}

LinearForm factor_form(const GammaFactor& g) { return {Rational(g.alpha), Rational(g.beta), g.gamma}; }

// Gamma(L + s) / Gamma(L) as linear-form factors, raised to power.
void shift_ratio(const LinearForm& L, long s, int power, FactoredRatio& out) {
  std::vector<LinearForm> up, down;
  if (s > 0)
    for (long j = 0; j < s; ++j) up.push_back({L.cn, L.ck, L.c0 + j});
  else
    for (long j = 1; j <= -s; ++j) down.push_back({L.cn, L.ck, L.c0 - j});
  if (power < 0) std::swap(up, down);
  for (int r = 0; r < std::abs(power); ++r) {
    out.num.insert(out.num.end(), up.begin(), up.end());
    out.den.insert(out.den.end(), down.begin(), down.end());
  }
}

void cancel(FactoredRatio& r) {
  std::sort(r.num.begin(), r.num.end());
  std::sort(r.den.begin(), r.den.end());
  std::vector<LinearForm> num, den;
  std::size_t i = 0, j = 0;
  while (i < r.num.size() || j < r.den.size()) {
    if (j == r.den.size() || (i < r.num.size() && r.num[i] < r.den[j])) {
      num.push_back(r.num[i++]);
    } else if (i == r.num.size() || r.den[j] < r.num[i]) {
      den.push_back(r.den[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  // Constant forms fold into the constant.
  auto fold = [&](std::vector<LinearForm>& v, bool in_num) {
    std::vector<LinearForm> keep;
    for (const auto& f : v) {
      if (f.cn == 0 && f.ck == 0) {
        if (f.c0 == 0 && !in_num) throw AlgorithmError("hypergeometric ratio has a zero denominator");
        r.constant = in_num ? Rational(r.constant * f.c0) : Rational(r.constant / f.c0);
      } else {
        keep.push_back(f);
      }
    }
    v = std::move(keep);
  };
  fold(num, true);
  fold(den, false);
  r.num = std::move(num);
  r.den = std::move(den);
}

std::string form_string(const LinearForm& f) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const Rational& c, const char* var) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    if (!var) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag);
      os << var;
    }
  };
  put(f.cn, "n");
  put(f.ck, "k");
  put(f.c0, nullptr);
  if (first) os << "0";
  return os.str();
}

}  // namespace

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.cn != b.cn) return a.cn < b.cn;
  if (a.ck != b.ck) return a.ck < b.ck;
  return a.c0 < b.c0;
}

Rational FactoredRatio::eval(const Rational& n, const Rational& k) const {
  Rational v = constant;
  for (const auto& f : num) v *= f.eval(n, k);
  for (const auto& f : den) {
    Rational d = f.eval(n, k);
    if (d == 0) throw AlgorithmError("PoleOnGrid: ratio denominator vanishes at n=" + to_string(n) + ", k=" + to_string(k));
    v /= d;
  }
  return v;
}

MPoly FactoredRatio::num_poly() const {
  MPoly p = MPoly::constant(kNK, constant);
  for (const auto& f : num) p = p * form_poly(f);
  return p;
}

MPoly FactoredRatio::den_poly() const {
  MPoly p = MPoly::constant(kNK, 1);
  for (const auto& f : den) p = p * form_poly(f);
  return p;
}

Rational HyperTerm::evaluate(long n, long k) const {
  Rational value = constant * pow(k_base, k) * pow(n_base, n);
  bool den_pole = false, num_pole = false;
  std::map<Rational, long> classes;  // fractional part -> net power of Gamma(frac)
  for (const auto& g : factors) {
    Rational L = Rational(g.alpha * n + g.beta * k) + g.gamma;
    if (is_integer(L) && L <= 0) {
      (g.power < 0 ? den_pole : num_pole) = true;
      continue;
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), L.get_num_mpz_t(), L.get_den_mpz_t());
    Rational frac = L - Rational(fl);
    Rational part;
    if (frac == 0) {
      part = Rational(factorial(fl.get_ui() - 1));
    } else {
      long m = fl.get_si();
      part = 1;
      if (m >= 0) {
        part = pochhammer(frac, static_cast<unsigned long>(m));
      } else {
        for (long j = 1; j <= -m; ++j) part /= (frac - j);
      }
      classes[frac] += g.power;
    }
    value *= pow(part, g.power);
  }
  if (den_pole) return 0;
  if (num_pole)
    throw AlgorithmError("term undefined at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ": Gamma pole in the numerator");
  for (const auto& [frac, p] : classes)
    if (p != 0) throw AlgorithmError("term is not rational-valued: unbalanced Gamma(" + diag::to_string(frac) + ")");
  return value;
}

Rational HyperTerm::sum(long n) const {
  Rational s = 0;
  long hi = k_hi_n * n + k_hi_c;
  for (long k = k_lo; k <= hi; ++k) s += evaluate(n, k);
  return s;
}

FactoredRatio HyperTerm::k_ratio() const {
  FactoredRatio r;
  r.constant = constant == 0 ? Rational(0) : k_base;
  for (const auto& g : factors) shift_ratio(factor_form(g), g.beta, g.power, r);
  cancel(r);
  return r;
}

FactoredRatio HyperTerm::n_ratio() const {
  FactoredRatio r;
  r.constant = constant == 0 ? Rational(0) : n_base;
  for (const auto& g : factors) shift_ratio(factor_form(g), g.alpha, g.power, r);
  cancel(r);
  return r;
}

std::string HyperTerm::to_string() const {
  std::ostringstream os;
  os << diag::to_string(constant);
  if (k_base != 1) os << "*(" << diag::to_string(k_base) << ")^k";
  if (n_base != 1) os << "*(" << diag::to_string(n_base) << ")^n";
  for (const auto& g : factors) {
    os << "*gamma(" << form_string(factor_form(g)) << ")";
    if (g.power != 1) os << "^" << g.power;
  }
  return os.str();
}

HyperTerm& HyperTerm::times(const HyperTerm& o) {
  constant *= o.constant;
  k_base *= o.k_base;
  n_base *= o.n_base;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

HyperTerm HyperTerm::binomial(long tn, long tk, const Rational& tc, long bn, long bk, const Rational& bc) {
  HyperTerm t;
  t.factors.push_back({tn, tk, tc + 1, 1});
  t.factors.push_back({bn, bk, bc + 1, -1});
  t.factors.push_back({tn - bn, tk - bk, tc - bc + 1, -1});
  return t;
}

HyperTerm HyperTerm::pochhammer_over_factorial(const Rational& x) {
  HyperTerm t;
  t.factors.push_back({0, 1, x, 1});
  t.factors.push_back({0, 0, x, -1});
  t.factors.push_back({0, 1, Rational(1), -1});
  return t;
}

HyperTerm binomial_term() {
  HyperTerm t = HyperTerm::binomial(1, 0, 0, 0, 1, 0);
  t.k_hi_n = 1;
  t.k_hi_c = 0;
  return t;
}

HyperTerm binomial_squared_term() {
  HyperTerm t = binomial_term();
  t.times(binomial_term());
  t.k_hi_n = 1;
  t.k_hi_c = 0;
  return t;
}

HyperTerm family_summand(long a, long b) {
  if (b <= 0) throw ValidationError(ValidationError::Kind::bad_argument, "family requires b > 0");
  HyperTerm t = HyperTerm::binomial(2, 0, 0, 1, 0, 0);
  t.times(HyperTerm::pochhammer_over_factorial(make_rational(-a, b)));
  t.times(HyperTerm::binomial(3, -1, 0, 2, -1, 0));
  t.k_hi_n = 2;
  t.k_hi_c = 0;
  return t;
}

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& s) : s_(s) {}

  HyperTerm parse() {
    HyperTerm t;
    skip();
    bool divide = false;
    while (true) {
      HyperTerm f = factor();
      if (divide) invert(f);
      t.times(f);
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] == '*') {
        divide = false;
      } else if (s_[pos_] == '/') {
        divide = true;
      } else {
        throw ParseError("expected '*' or '/'", pos_);
      }
      ++pos_;
      skip();
    }
    return t;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  static void invert(HyperTerm& t) {
    if (t.constant == 0) throw ValidationError(ValidationError::Kind::bad_argument, "division by zero constant");
    t.constant = 1 / t.constant;
    t.k_base = 1 / t.k_base;
    t.n_base = 1 / t.n_base;
    for (auto& g : t.factors) g.power = -g.power;
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    std::string text = s_.substr(start, pos_ - start);
    // A '/' directly followed by a digit inside a number continues it.
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      std::size_t d = ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      text += "/" + s_.substr(d, pos_ - d);
    }
    return parse_rational(text);
  }

  // Linear form in n, k: signed terms like 3n, -k, 2*n, -1/3.
  LinearForm linear() {
    LinearForm f{0, 0, 0};
    bool any = false;
    while (true) {
      skip();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        skip();
      } else if (any) {
        break;
      }
      if (pos_ >= s_.size()) throw ParseError("unexpected end of linear form", pos_);
      Rational c = 1;
      bool have_num = false;
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c = number();
        have_num = true;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip();
        }
      }
      c *= sign;
      if (pos_ < s_.size() && s_[pos_] == 'n') {
        ++pos_;
        f.cn += c;
      } else if (pos_ < s_.size() && s_[pos_] == 'k') {
        ++pos_;
        f.ck += c;
      } else if (have_num) {
        f.c0 += c;
      } else {
        throw ParseError("expected n, k or a number", pos_);
      }
      any = true;
    }
    if (!is_integer(f.cn) || !is_integer(f.ck))
      throw ParseError("coefficients of n and k must be integers", pos_);
    return f;
  }

  static GammaFactor gamma_of(const LinearForm& f, int power) {
    return {f.cn.get_num().get_si(), f.ck.get_num().get_si(), f.c0, power};
  }

  HyperTerm factor() {
    skip();
    HyperTerm t;
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Rational base = number_signed();
      expect(')');
      expect('^');
      skip();
      char v = pos_ < s_.size() ? s_[pos_] : '\0';
      if (v != 'n' && v != 'k') throw ParseError("expected ^n or ^k", pos_);
      ++pos_;
      (v == 'n' ? t.n_base : t.k_base) = base;
      return t;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      Rational c = number_signed();
      skip();
      if (eat('^')) {
        skip();
        char v = pos_ < s_.size() ? s_[pos_] : '\0';
        if (v != 'n' && v != 'k') throw ParseError("expected ^n or ^k", pos_);
        ++pos_;
        (v == 'n' ? t.n_base : t.k_base) = c;
      } else {
        t.constant = c;
      }
      return t;
    }
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    expect('(');
    if (name == "binomial") {
      LinearForm top = linear();
      expect(',');
      LinearForm bot = linear();
      expect(')');
      t = HyperTerm::binomial(top.cn.get_num().get_si(), top.ck.get_num().get_si(), top.c0,
                              bot.cn.get_num().get_si(), bot.ck.get_num().get_si(), bot.c0);
    } else if (name == "poch") {
      LinearForm x = linear();
      expect(',');
      LinearForm m = linear();
      expect(')');
      LinearForm sum{x.cn + m.cn, x.ck + m.ck, x.c0 + m.c0};
      t.factors.push_back(gamma_of(sum, 1));
      t.factors.push_back(gamma_of(x, -1));
    } else if (name == "fact") {
      LinearForm x = linear();
      expect(')');
      x.c0 += 1;
      t.factors.push_back(gamma_of(x, 1));
    } else if (name == "gamma") {
      LinearForm x = linear();
      expect(')');
      t.factors.push_back(gamma_of(x, 1));
    } else {
      throw ParseError("unknown factor '" + name + "'", start);
    }
    if (eat('^')) {
      skip();
      int sign = 1;
      if (eat('-')) sign = -1;
      skip();
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) throw ParseError("malformed exponent", pos_);
      int e = sign * std::stoi(s_.substr(d, pos_ - d));
      HyperTerm out;
      if (e == 0) return out;
      for (auto g : t.factors) {
        g.power *= e;
        out.factors.push_back(g);
      }
      return out;
    }
    return t;
  }

  Rational number_signed() {
    skip();
    int sign = 1;
    if (eat('-')) sign = -1;
    return number() * sign;
  }
};

}  // namespace

HyperTerm parse_hyperterm(const std::string& text) {
  TermParser p(text);
  HyperTerm t = p.parse();
  return t;
}

}  // namespace diag
