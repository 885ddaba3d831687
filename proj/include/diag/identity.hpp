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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diag/rational.hpp"
#include "diag/series.hpp"

namespace diag {

// A univariate series built from primitive sources and combinators.
struct Recipe {
  enum class Kind { diag, hyp, expr, hadamard, product, compose, rescale };
  Kind kind = Kind::expr;
  std::string text;               // expression (diag, expr) or spec (hyp)
  std::vector<Recipe> children;   // operands; compose is {outer, inner}
  Rational factor = 1;            // rescale: x -> factor * x

  static Recipe diag(std::string expr);
  static Recipe hyp(std::string spec);
  static Recipe expr(std::string text);
  static Recipe hadamard(std::vector<Recipe> parts);
  static Recipe product(std::vector<Recipe> parts);
  static Recipe compose(Recipe outer, Recipe inner);
  static Recipe rescale(Recipe inner, const Rational& c);
};

std::string to_string(const Recipe& r);
// Coefficients 0..N. Diagonal sources are expanded on the box [0,N]^n.
UniSeries evaluate(const Recipe& r, std::size_t N);

enum class Expect { match, report };

// Extra right-hand side whose outcome is recorded but never decides the verdict.
struct Variant {
  std::string label;
  Recipe side;
};

struct IdentityCase {
  std::string name;
  std::vector<Recipe> sides;  // every side is compared with sides[0]
  std::size_t N = 20;
  Expect expect = Expect::match;
  std::vector<Variant> variants;
};

struct Mismatch {
  std::size_t side = 0;
  std::size_t index = 0;
  Rational lhs;
  Rational rhs;
};

struct VariantOutcome {
  std::string label;
  std::optional<Mismatch> mismatch;
};

struct Report {
  std::string name;
  std::size_t order = 0;
  Expect expect = Expect::match;
  std::optional<Mismatch> mismatch;  // empty when every side matches
  std::vector<VariantOutcome> variants;
  std::string error;                 // expansion failure, if any

  bool matched() const { return error.empty() && !mismatch; }
  // A failure is a mismatch or error on a case expected to match.
  bool failed() const { return expect == Expect::match && !matched(); }
};

Report check(const IdentityCase& c);
// Runs cases on up to `threads` workers; reports come back sorted by name.
std::vector<Report> run_cases(const std::vector<IdentityCase>& cases, unsigned threads = 1);

std::vector<IdentityCase> builtin_suite();

// Diagonal of the printed six-variable rational function for the family
// member (a,b), compared with the hypergeometric series through order N.
// Always a report: the outcome is recorded, not asserted.
Report fixture_report(long a, long b, std::size_t N);

// One JSON object per line: name, status, order and, on mismatch, the first
// differing index with both values.
std::string to_json_line(const Report& r);

std::string cases_to_json(const std::vector<IdentityCase>& cases);
std::vector<IdentityCase> cases_from_json(const std::string& text);

}  // namespace diag
