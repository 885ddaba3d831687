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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diag/expr.hpp"
#include "diag/mpoly.hpp"
#include "diag/ratfunc.hpp"

namespace diag {

enum class Layout { automatic, dense, sparse };

struct SeriesLimits {
  // Boxes up to this many cells are stored densely under Layout::automatic.
  std::uint64_t dense_volume = std::uint64_t{1} << 21;
  // Hard cap on stored coefficients in either layout.
  std::uint64_t max_terms = 40'000'000;
};

SeriesLimits& series_limits();

// Truncated power series on a box: exponent i of variable k ranges over 0..bounds[k].
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(std::vector<std::string> vars, std::vector<std::uint32_t> bounds,
              Layout layout = Layout::automatic);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<std::uint32_t>& bounds() const { return bounds_; }
  std::size_t nvars() const { return vars_.size(); }
  bool dense() const { return dense_; }
  std::uint64_t volume() const { return volume_; }

  Rational coefficient(const Exponent& e) const;
  void set(const Exponent& e, const Rational& c);
  void add_to(std::uint64_t lin, const Rational& c);

  // Nonzero coefficients in lexicographic exponent order.
  std::vector<std::pair<Exponent, Rational>> nonzeros() const;
  std::size_t nonzero_count() const;

  MultiSeries with_layout(Layout layout) const;

  std::uint64_t linear(const Exponent& e) const;
  Exponent exponent_of(std::uint64_t lin) const;
  bool in_box(const Exponent& e) const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  // Raw access used by the arithmetic kernels.
  std::vector<Rational>& dense_data() { return data_; }
  const std::vector<Rational>& dense_data() const { return data_; }
  std::map<std::uint64_t, Rational>& sparse_data() { return sparse_; }
  const std::map<std::uint64_t, Rational>& sparse_data() const { return sparse_; }
  const std::vector<std::uint64_t>& strides() const { return strides_; }

 private:
  std::vector<std::string> vars_;
  std::vector<std::uint32_t> bounds_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t volume_ = 0;
  bool dense_ = true;
  std::vector<Rational> data_;
  std::map<std::uint64_t, Rational> sparse_;
};

struct UniSeries {
  std::string var = "x";
  std::vector<Rational> c;  // c[0..N]

  UniSeries() = default;
  UniSeries(std::string v, std::vector<Rational> coeffs) : var(std::move(v)), c(std::move(coeffs)) {}
  std::size_t order() const { return c.empty() ? 0 : c.size() - 1; }
  friend bool operator==(const UniSeries& a, const UniSeries& b) { return a.var == b.var && a.c == b.c; }
};

// Arithmetic at a common box. Operands must share variables and bounds.
MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const Rational& c);
// Quotient by triangular solve; the divisor needs a nonzero constant term.
MultiSeries divide(const MultiSeries& num, const MultiSeries& den);
// 1/s as (1/s0) * sum_k (-(s - s0)/s0)^k, stopped once the power leaves the box.
MultiSeries inverse_geometric(const MultiSeries& s);
// (1 + u)^alpha by the generalized binomial series; s must have constant term 1.
MultiSeries pow_rational(const MultiSeries& s, const Rational& alpha);
MultiSeries pow_integer(const MultiSeries& s, unsigned k);

MultiSeries constant_series(const std::vector<std::string>& vars, const std::vector<std::uint32_t>& bounds,
                            const Rational& c, Layout layout = Layout::automatic);
MultiSeries from_poly(const MPoly& p, const std::vector<std::uint32_t>& bounds, Layout layout = Layout::automatic);

MultiSeries expand(const ValidatedExpr& e, const std::vector<std::uint32_t>& bounds,
                   Layout layout = Layout::automatic);
MultiSeries expand(const RationalFunction& r, const std::vector<std::uint32_t>& bounds,
                   Layout layout = Layout::automatic);

UniSeries diagonal(const MultiSeries& s);
MultiSeries partial_diagonal(const MultiSeries& s, const std::vector<std::pair<std::string, std::string>>& pairs,
                             const std::vector<std::string>& names = {});
// Keeps the terms whose exponent of `y` equals the sum of the other exponents.
MultiSeries d_operator(const MultiSeries& s, const std::string& y);
MultiSeries restrict_box(const MultiSeries& s, const std::vector<std::uint32_t>& bounds);

// Univariate helpers.
UniSeries to_uni(const MultiSeries& s);
MultiSeries to_multi(const UniSeries& u);
UniSeries uni_expand(const ValidatedExpr& e, std::uint32_t order);
UniSeries hadamard(const UniSeries& f, const UniSeries& g);
UniSeries compose(const UniSeries& f, const UniSeries& g);
UniSeries uni_mul(const UniSeries& f, const UniSeries& g);
UniSeries uni_add(const UniSeries& f, const UniSeries& g);
UniSeries truncate(const UniSeries& f, std::size_t order);
// x -> c*x
UniSeries rescale(const UniSeries& f, const Rational& c);
UniSeries derivative(const UniSeries& f);
// First index where the two series differ within the common order.
std::optional<std::size_t> first_mismatch(const UniSeries& a, const UniSeries& b);

std::string to_json(const MultiSeries& s);
MultiSeries multiseries_from_json(const std::string& text);
std::string to_text(const UniSeries& u);

}  // namespace diag
