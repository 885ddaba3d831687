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


#include "diag/mpoly.hpp"

#include <algorithm>

#include "diag/errors.hpp"

namespace diag {

namespace {

void require_same_vars(const MPoly& a, const MPoly& b) {
  if (a.variables() != b.variables())
    throw AlgorithmError("polynomial variable lists differ");
}

}  // namespace

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponent(p.nvars(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MPoly p(std::move(vars));
  int i = p.index_of(name);
  if (i < 0) throw ValidationError(ValidationError::Kind::unknown_variable, name);
  Exponent e(p.nvars(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rational MPoly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

Rational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t MPoly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly r(a.vars_);
  const std::size_t n = a.nvars();
  Exponent e(n);
  Rational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(e, t);
    }
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars()) throw AlgorithmError("substitute: wrong number of images");
  std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images[0].vars_;
  for (const auto& im : images)
    if (im.vars_ != target) throw AlgorithmError("substitute: images over different variables");
  // Cache powers of each image; exponents are small in practice.
  std::vector<std::vector<MPoly>> powers(nvars());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly r(target);
  for (const auto& [e, c] : terms_) {
    MPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

MPoly MPoly::rebase(const std::vector<std::string>& new_vars) const {
  std::vector<std::size_t> pos(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end()) {
      if (degree(i) == 0) {
        pos[i] = new_vars.size();  // unused variable, dropped
        continue;
      }
      throw ValidationError(ValidationError::Kind::unknown_variable, vars_[i]);
    }
    pos[i] = static_cast<std::size_t>(it - new_vars.begin());
  }
  MPoly r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (pos[i] < new_vars.size()) f[pos[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw AlgorithmError("evaluate: wrong point dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= diag::pow(point[i], static_cast<long>(e[i]));
    sum += t;
  }
  return sum;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
  require_same_vars(*this, d);
  if (d.is_zero()) throw AlgorithmError("division by zero polynomial");
  MPoly rem = *this;
  MPoly quot(vars_);
  const auto& [dl_e, dl_c] = *d.terms_.rbegin();
  const std::size_t n = nvars();
  Exponent qe(n), e(n);
  Rational qc, t;
  while (!rem.is_zero()) {
    const auto& [rl_e, rl_c] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      if (rl_e[i] < dl_e[i]) throw AlgorithmError("DivisionNotExact: polynomial division left a remainder");
      qe[i] = rl_e[i] - dl_e[i];
    }
    qc = rl_c / dl_c;
    quot.add_term(qe, qc);
    for (const auto& [de, dc] : d.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = qe[i] + de[i];
      mpq_mul(t.get_mpq_t(), qc.get_mpq_t(), dc.get_mpq_t());
      rem.add_term(e, -t);
    }
  }
  return quot;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += diag::to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += diag::to_string(a) + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  for (const auto& v : b)
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  return r;
}

}  // namespace diag
