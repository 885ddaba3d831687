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

#include "diag/errors.hpp"
#include "series_internal.hpp"

namespace diag {

SeriesLimits& series_limits() {
  static SeriesLimits limits;
  return limits;
}

MultiSeries::MultiSeries(std::vector<std::string> vars, std::vector<std::uint32_t> bounds, Layout layout)
    : vars_(std::move(vars)), bounds_(std::move(bounds)) {
  if (vars_.size() != bounds_.size()) throw InputError("truncation vector length differs from variable count");
  const std::size_t n = vars_.size();
  strides_.assign(n, 1);
  volume_ = 1;
  for (std::size_t i = n; i-- > 0;) {
    strides_[i] = volume_;
    std::uint64_t side = std::uint64_t{bounds_[i]} + 1;
    if (volume_ > (~std::uint64_t{0}) / side) throw ResourceError("truncation box volume overflows 64 bits");
    volume_ *= side;
  }
  const auto& lim = series_limits();
  if (layout == Layout::automatic) layout = volume_ <= lim.dense_volume ? Layout::dense : Layout::sparse;
  dense_ = layout == Layout::dense;
  if (dense_) {
    if (volume_ > lim.max_terms)
      throw ResourceError("dense series of " + std::to_string(volume_) + " cells exceeds the term limit");
    data_.resize(volume_);
  }
}

std::uint64_t MultiSeries::linear(const Exponent& e) const {
  std::uint64_t lin = 0;
  for (std::size_t i = 0; i < e.size(); ++i) lin += e[i] * strides_[i];
  return lin;
}

Exponent MultiSeries::exponent_of(std::uint64_t lin) const {
  Exponent e(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    e[i] = static_cast<std::uint32_t>(lin / strides_[i]);
    lin %= strides_[i];
  }
  return e;
}

bool MultiSeries::in_box(const Exponent& e) const {
  if (e.size() != nvars()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > bounds_[i]) return false;
  return true;
}

Rational MultiSeries::coefficient(const Exponent& e) const {
  if (!in_box(e)) throw InputError("exponent outside the truncation box");
  std::uint64_t lin = linear(e);
  if (dense_) return data_[lin];
  auto it = sparse_.find(lin);
  return it == sparse_.end() ? Rational(0) : it->second;
}

void MultiSeries::set(const Exponent& e, const Rational& c) {
  if (!in_box(e)) throw InputError("exponent outside the truncation box");
  std::uint64_t lin = linear(e);
  if (dense_) {
    data_[lin] = c;
  } else if (c == 0) {
    sparse_.erase(lin);
  } else {
    sparse_[lin] = c;
    if (sparse_.size() > series_limits().max_terms) throw ResourceError("sparse series exceeds the term limit");
  }
}

void MultiSeries::add_to(std::uint64_t lin, const Rational& c) {
  if (dense_) {
    data_[lin] += c;
    return;
  }
  if (c == 0) return;
  auto [it, inserted] = sparse_.try_emplace(lin, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) sparse_.erase(it);
  } else if (sparse_.size() > series_limits().max_terms) {
    throw ResourceError("sparse series exceeds the term limit");
  }
}

std::vector<std::pair<Exponent, Rational>> MultiSeries::nonzeros() const {
  std::vector<std::pair<Exponent, Rational>> out;
  for (const auto& en : detail::entries(*this)) out.emplace_back(en.e, *en.c);
  return out;
}

std::size_t MultiSeries::nonzero_count() const {
  if (!dense_) return sparse_.size();
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

MultiSeries MultiSeries::with_layout(Layout layout) const {
  MultiSeries r(vars_, bounds_, layout);
  if (r.dense_ == dense_) {
    r.data_ = data_;
    r.sparse_ = sparse_;
    return r;
  }
  for (const auto& en : detail::entries(*this)) r.add_to(en.lin, *en.c);
  return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars_ != b.vars_ || a.bounds_ != b.bounds_) return false;
  auto ea = detail::entries(a);
  auto eb = detail::entries(b);
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i].lin != eb[i].lin || *ea[i].c != *eb[i].c) return false;
  return true;
}

namespace detail {

std::vector<Entry> entries(const MultiSeries& s) {
  std::vector<Entry> out;
  if (s.dense()) {
    const auto& data = s.dense_data();
    const std::size_t n = s.nvars();
    Exponent e(n, 0);
    for (std::uint64_t lin = 0; lin < data.size(); ++lin) {
      if (sgn(data[lin]) != 0) out.push_back({e, lin, &data[lin]});
      for (std::size_t d = n; d-- > 0;) {
        if (e[d] < s.bounds()[d]) {
          ++e[d];
          break;
        }
        e[d] = 0;
      }
    }
  } else {
    for (const auto& [lin, c] : s.sparse_data()) out.push_back({s.exponent_of(lin), lin, &c});
  }
  return out;
}

bool same_box(const MultiSeries& a, const MultiSeries& b) {
  return a.variables() == b.variables() && a.bounds() == b.bounds();
}

void require_same_box(const MultiSeries& a, const MultiSeries& b) {
  if (!same_box(a, b)) throw InputError("series operands have different variables or truncation");
}

}  // namespace detail

namespace {

using detail::Entry;

Layout result_layout(const MultiSeries& a, const MultiSeries& b) {
  return (a.dense() || b.dense()) ? Layout::dense : Layout::sparse;
}

// out += a * (sub-box of dense b), a fixed.
void accumulate_dense_block(MultiSeries& out, const Entry& a, const MultiSeries& b) {
  const std::size_t n = b.nvars();
  const auto& bounds = b.bounds();
  const auto& strides = b.strides();
  const auto& bd = b.dense_data();
  auto& od = out.dense_data();
  if (n == 0) {
    od[0] += *a.c * bd[0];
    return;
  }
  std::vector<std::uint32_t> lim(n), f(n, 0);
  for (std::size_t i = 0; i < n; ++i) lim[i] = bounds[i] - a.e[i];
  mpq_t t;
  mpq_init(t);
  std::uint64_t lin = 0;
  const std::size_t last = n - 1;
  for (;;) {
    for (std::uint32_t j = 0; j <= lim[last]; ++j) {
      const Rational& bv = bd[lin + j];
      if (mpq_sgn(bv.get_mpq_t()) == 0) continue;
      mpq_mul(t, a.c->get_mpq_t(), bv.get_mpq_t());
      Rational& o = od[a.lin + lin + j];
      mpq_add(o.get_mpq_t(), o.get_mpq_t(), t);
    }
    std::size_t d = last;
    bool done = true;
    while (d-- > 0) {
      if (f[d] < lim[d]) {
        ++f[d];
        lin += strides[d];
        done = false;
        break;
      }
      lin -= f[d] * strides[d];
      f[d] = 0;
    }
    if (done) break;
  }
  mpq_clear(t);
}

}  // namespace

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  detail::require_same_box(a, b);
  MultiSeries r = a.with_layout(result_layout(a, b));
  for (const auto& en : detail::entries(b)) r.add_to(en.lin, *en.c);
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + b * Rational(-1); }

MultiSeries operator*(const MultiSeries& a, const Rational& c) {
  MultiSeries r(a.variables(), a.bounds(), a.dense() ? Layout::dense : Layout::sparse);
  if (c == 0) return r;
  for (const auto& en : detail::entries(a)) r.add_to(en.lin, *en.c * c);
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  detail::require_same_box(a, b);
  MultiSeries r(a.variables(), a.bounds(), result_layout(a, b));
  auto ea = detail::entries(a);
  auto eb = detail::entries(b);
  const MultiSeries* other = &b;
  if (ea.size() > eb.size()) {
    std::swap(ea, eb);
    other = &a;
  }
  const std::size_t n = a.nvars();
  // Dense inner operand with many nonzeros: walk its sub-box directly.
  if (r.dense() && other->dense() && eb.size() * 4 > other->volume()) {
    for (const auto& x : ea) accumulate_dense_block(r, x, *other);
    return r;
  }
  Rational t;
  for (const auto& x : ea) {
    for (const auto& y : eb) {
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (x.e[i] + y.e[i] > a.bounds()[i]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      mpq_mul(t.get_mpq_t(), x.c->get_mpq_t(), y.c->get_mpq_t());
      r.add_to(x.lin + y.lin, t);
    }
  }
  return r;
}

MultiSeries constant_series(const std::vector<std::string>& vars, const std::vector<std::uint32_t>& bounds,
                            const Rational& c, Layout layout) {
  MultiSeries r(vars, bounds, layout);
  r.add_to(0, c);
  return r;
}

MultiSeries from_poly(const MPoly& p, const std::vector<std::uint32_t>& bounds, Layout layout) {
  MultiSeries r(p.variables(), bounds, layout);
  for (const auto& [e, c] : p.terms())
    if (r.in_box(e)) r.add_to(r.linear(e), c);
  return r;
}

namespace {

MultiSeries divide_dense(const MultiSeries& num, const MultiSeries& den) {
  const std::size_t n = num.nvars();
  MultiSeries q(num.variables(), num.bounds(), Layout::dense);
  MultiSeries nd = num.dense() ? num : num.with_layout(Layout::dense);
  auto dn = detail::entries(den);
  if (dn.empty() || dn[0].lin != 0) throw ValidationError(ValidationError::Kind::denominator_vanishes_at_origin,
                                                          "series divisor has zero constant term");
  Rational d0inv = Rational(1) / *dn[0].c;
  dn.erase(dn.begin());
  auto& qd = q.dense_data();
  const auto& ndd = nd.dense_data();
  Exponent e(n, 0);
  mpq_t acc, t;
  mpq_init(acc);
  mpq_init(t);
  for (std::uint64_t lin = 0; lin < qd.size(); ++lin) {
    mpq_set(acc, ndd[lin].get_mpq_t());
    for (const auto& d : dn) {
      bool below = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (d.e[i] > e[i]) {
          below = false;
          break;
        }
      }
      if (!below) continue;
      const Rational& qv = qd[lin - d.lin];
      if (mpq_sgn(qv.get_mpq_t()) == 0) continue;
      mpq_mul(t, d.c->get_mpq_t(), qv.get_mpq_t());
      mpq_sub(acc, acc, t);
    }
    mpq_mul(qd[lin].get_mpq_t(), acc, d0inv.get_mpq_t());
    for (std::size_t d = n; d-- > 0;) {
      if (e[d] < num.bounds()[d]) {
        ++e[d];
        break;
      }
      e[d] = 0;
    }
  }
  mpq_clear(acc);
  mpq_clear(t);
  return q;
}

}  // namespace

MultiSeries inverse_geometric(const MultiSeries& s) {
  Rational s0 = s.coefficient(Exponent(s.nvars(), 0));
  if (s0 == 0) throw ValidationError(ValidationError::Kind::denominator_vanishes_at_origin,
                                     "series divisor has zero constant term");
  Layout lay = s.dense() ? Layout::dense : Layout::sparse;
  MultiSeries one = constant_series(s.variables(), s.bounds(), 1, lay);
  MultiSeries v = (one - s * (Rational(1) / s0)).with_layout(lay);  // zero constant term
  MultiSeries sum = one;
  MultiSeries term = one;
  for (;;) {
    term = term * v;
    if (term.nonzero_count() == 0) break;
    sum = sum + term;
  }
  return sum * (Rational(1) / s0);
}

MultiSeries divide(const MultiSeries& num, const MultiSeries& den) {
  detail::require_same_box(num, den);
  if (num.dense() || den.dense()) return divide_dense(num, den);
  return num * inverse_geometric(den);
}

MultiSeries pow_rational(const MultiSeries& s, const Rational& alpha) {
  Rational s0 = s.coefficient(Exponent(s.nvars(), 0));
  if (s0 != 1)
    throw ValidationError(ValidationError::Kind::pow_base_constant_term_not_one,
                          "power base has constant term " + to_string(s0));
  Layout lay = s.dense() ? Layout::dense : Layout::sparse;
  MultiSeries one = constant_series(s.variables(), s.bounds(), 1, lay);
  MultiSeries u = s - one;
  MultiSeries sum = one;
  MultiSeries term = one;
  Rational coef = 1;
  for (unsigned long k = 1;; ++k) {
    coef *= (alpha - (k - 1)) / Rational(static_cast<long>(k));
    if (coef == 0) break;
    term = term * u;
    if (term.nonzero_count() == 0) break;
    sum = sum + term * coef;
  }
  return sum;
}

MultiSeries pow_integer(const MultiSeries& s, unsigned k) {
  MultiSeries result = constant_series(s.variables(), s.bounds(), 1, s.dense() ? Layout::dense : Layout::sparse);
  MultiSeries base = s;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace diag
