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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diag/mpoly.hpp"
#include "diag/ratfunc.hpp"

namespace diag {

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

enum class NodeKind { constant, poly, add, mul, div, powrat };

struct ExprNode {
  NodeKind kind;
  Rational value;                 // constant
  MPoly poly;                     // poly
  std::vector<NodePtr> children;  // add/mul: >= 2, div: 2, powrat: 1
  Rational exponent;              // powrat, lowest terms
};

// Immutable algebraic expression over a declared, ordered variable list.
//
// Construction always goes through the normalizing builders below, so
// polynomial-valued subtrees are folded into a single Poly (or Const) node,
// nested sums and products are flattened, and negative integer powers become
// divisions.
class AlgExpr {
 public:
  AlgExpr() = default;
  AlgExpr(std::vector<std::string> vars, NodePtr root);

  const std::vector<std::string>& variables() const { return vars_; }
  const NodePtr& root() const { return root_; }
  NodeKind kind() const { return root_->kind; }

  // True when the tree is a single Poly or Const node.
  bool is_polynomial() const;
  // Polynomial value of a Poly/Const root; throws otherwise.
  MPoly as_polynomial() const;

  friend bool operator==(const AlgExpr& a, const AlgExpr& b);

 private:
  std::vector<std::string> vars_;
  NodePtr root_;
};

// Normalizing node builders. Every MPoly handed in must use `vars`.
NodePtr make_const(const Rational& c);
NodePtr make_poly(const MPoly& p);
NodePtr make_add(const std::vector<std::string>& vars, std::vector<NodePtr> children);
NodePtr make_mul(const std::vector<std::string>& vars, std::vector<NodePtr> children);
NodePtr make_div(const std::vector<std::string>& vars, NodePtr num, NodePtr den);
NodePtr make_pow(const std::vector<std::string>& vars, NodePtr base, const Rational& exponent);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

AlgExpr parse_expr(const std::string& text, const std::vector<std::string>& variables);
std::string serialize(const AlgExpr& e);

// Same expression viewed over a larger variable list (declared order kept as given).
AlgExpr with_variables(const AlgExpr& e, const std::vector<std::string>& vars);

// Simultaneous substitution. Bindings must be expressions over e.variables().
AlgExpr substitute(const AlgExpr& e, const std::map<std::string, AlgExpr>& bindings);

class ValidatedExpr {
 public:
  const AlgExpr& expr() const { return expr_; }
  const std::vector<std::string>& variables() const { return expr_.variables(); }
  // Value of the expression at the origin (exact).
  const Rational& value_at_origin() const { return origin_; }

 private:
  friend ValidatedExpr validate(const AlgExpr& e);
  ValidatedExpr(AlgExpr e, Rational origin) : expr_(std::move(e)), origin_(std::move(origin)) {}
  AlgExpr expr_;
  Rational origin_;
};

ValidatedExpr validate(const AlgExpr& e);
ValidatedExpr parse_validated(const std::string& text, const std::vector<std::string>& variables);

// Exact conversion for expressions without non-integer powers.
bool is_rational_expr(const AlgExpr& e);
RationalFunction to_rational_function(const AlgExpr& e);

// Variable names in order of first appearance in `text` (identifiers of the grammar).
std::vector<std::string> scan_variables(const std::string& text);

}  // namespace diag
