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
#include <string>
#include <vector>

#include "diag/rational.hpp"

namespace diag {

using Exponent = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q. Terms are kept in lexicographic
// exponent order (first variable most significant); zero coefficients are
// never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(std::vector<std::string> vars, const Rational& c);
  static MPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  // Position of a variable, or -1.
  int index_of(const std::string& name) const;

  void add_term(const Exponent& e, const Rational& c);

  std::uint32_t degree(std::size_t var) const;
  std::uint32_t total_degree() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t var) const;

  // Simultaneous substitution: variable i is replaced by images[i]. All images
  // must share one variable list, which becomes the variable list of the result.
  MPoly substitute(const std::vector<MPoly>& images) const;
  // Same polynomial over a larger (or permuted) variable list.
  MPoly rebase(const std::vector<std::string>& new_vars) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Exact quotient; throws AlgorithmError when d does not divide *this.
  MPoly divide_exact(const MPoly& d) const;

  // Expression-grammar rendering, e.g. "3*x^2*y - 1/2*z + 1".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Union of two variable lists, keeping the order of `a` then new names of `b`.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace diag
