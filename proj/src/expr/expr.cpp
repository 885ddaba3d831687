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
#include "diag/expr.hpp"

namespace diag {

namespace {

using K = ValidationError::Kind;

bool is_polyish(const NodePtr& n) { return n->kind == NodeKind::constant || n->kind == NodeKind::poly; }

MPoly polyish_value(const std::vector<std::string>& vars, const NodePtr& n) {
  if (n->kind == NodeKind::constant) return MPoly::constant(vars, n->value);
  return n->poly;
}

NodePtr node(NodeKind kind, std::vector<NodePtr> children) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->children = std::move(children);
  return n;
}

}  // namespace

AlgExpr::AlgExpr(std::vector<std::string> vars, NodePtr root) : vars_(std::move(vars)), root_(std::move(root)) {}

bool AlgExpr::is_polynomial() const { return is_polyish(root_); }

MPoly AlgExpr::as_polynomial() const {
  if (!is_polynomial()) throw ValidationError(K::unsupported_shape, "expression is not a polynomial");
  return polyish_value(vars_, root_);
}

NodePtr make_const(const Rational& c) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::constant;
  n->value = c;
  return n;
}

NodePtr make_poly(const MPoly& p) {
  if (p.is_constant()) return make_const(p.constant_term());
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::poly;
  n->poly = p;
  return n;
}

NodePtr make_add(const std::vector<std::string>& vars, std::vector<NodePtr> children) {
  std::vector<NodePtr> flat;
  for (auto& c : children) {
    if (c->kind == NodeKind::add) {
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    } else {
      flat.push_back(c);
    }
  }
  MPoly folded(vars);
  bool any_poly = false;
  std::vector<NodePtr> rest;
  for (auto& c : flat) {
    if (is_polyish(c)) {
      folded += polyish_value(vars, c);
      any_poly = true;
    } else {
      rest.push_back(c);
    }
  }
  if (rest.empty()) return make_poly(folded);
  std::vector<NodePtr> out;
  if (any_poly && !folded.is_zero()) out.push_back(make_poly(folded));
  out.insert(out.end(), rest.begin(), rest.end());
  if (out.size() == 1) return out[0];
  return node(NodeKind::add, std::move(out));
}

NodePtr make_mul(const std::vector<std::string>& vars, std::vector<NodePtr> children) {
  std::vector<NodePtr> flat;
  for (auto& c : children) {
    if (c->kind == NodeKind::mul) {
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    } else {
      flat.push_back(c);
    }
  }
  MPoly folded = MPoly::constant(vars, 1);
  std::vector<NodePtr> rest;
  for (auto& c : flat) {
    if (is_polyish(c)) {
      folded = folded * polyish_value(vars, c);
    } else {
      rest.push_back(c);
    }
  }
  if (rest.empty() || folded.is_zero()) return make_poly(folded);
  std::vector<NodePtr> out;
  if (!(folded.is_constant() && folded.constant_term() == 1)) out.push_back(make_poly(folded));
  out.insert(out.end(), rest.begin(), rest.end());
  if (out.size() == 1) return out[0];
  return node(NodeKind::mul, std::move(out));
}

NodePtr make_div(const std::vector<std::string>& vars, NodePtr num, NodePtr den) {
  if (den->kind == NodeKind::constant && den->value != 0)
    return make_mul(vars, {num, make_const(Rational(1) / den->value)});
  return node(NodeKind::div, {std::move(num), std::move(den)});
}

NodePtr make_pow(const std::vector<std::string>& vars, NodePtr base, const Rational& exponent) {
  if (is_integer(exponent)) {
    if (exponent < 0) {
      return make_div(vars, make_const(1), make_pow(vars, base, -exponent));
    }
    if (exponent == 0) return make_const(1);
    if (exponent == 1) return base;
    if (is_polyish(base)) {
      unsigned long k = exponent.get_num().get_ui();
      return make_poly(polyish_value(vars, base).pow(static_cast<unsigned>(k)));
    }
  } else if (base->kind == NodeKind::constant && base->value == 1) {
    return make_const(1);
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::powrat;
  n->children = {std::move(base)};
  n->exponent = exponent;
  return n;
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::constant: return a->value == b->value;
    case NodeKind::poly: return a->poly == b->poly;
    case NodeKind::powrat:
      if (a->exponent != b->exponent) return false;
      break;
    default: break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

bool operator==(const AlgExpr& a, const AlgExpr& b) {
  return a.vars_ == b.vars_ && structurally_equal(a.root_, b.root_);
}

namespace {

std::string serialize_node(const NodePtr& n) {
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (n->kind) {
    case NodeKind::constant: return paren(to_string(n->value));
    case NodeKind::poly: return paren(n->poly.to_string());
    case NodeKind::add:
    case NodeKind::mul: {
      std::string s;
      const char* op = n->kind == NodeKind::add ? " + " : " * ";
      for (std::size_t i = 0; i < n->children.size(); ++i) {
        if (i) s += op;
        s += paren(serialize_node(n->children[i]));
      }
      return s;
    }
    case NodeKind::div:
      return paren(serialize_node(n->children[0])) + "/" + paren(serialize_node(n->children[1]));
    case NodeKind::powrat:
      return paren(serialize_node(n->children[0])) + "^" + paren(to_string(n->exponent));
  }
  return {};
}

NodePtr rebase_node(const NodePtr& n, const std::vector<std::string>& vars) {
  switch (n->kind) {
    case NodeKind::constant: return n;
    case NodeKind::poly: return make_poly(n->poly.rebase(vars));
    default: break;
  }
  std::vector<NodePtr> kids;
  for (const auto& c : n->children) kids.push_back(rebase_node(c, vars));
  auto m = std::make_shared<ExprNode>(*n);
  m->children = std::move(kids);
  return m;
}

NodePtr substitute_node(const NodePtr& n, const std::vector<std::string>& vars,
                        const std::vector<NodePtr>& images, bool all_poly) {
  switch (n->kind) {
    case NodeKind::constant: return n;
    case NodeKind::poly: {
      if (all_poly) {
        std::vector<MPoly> ims;
        for (const auto& im : images) ims.push_back(polyish_value(vars, im));
        return make_poly(n->poly.substitute(ims));
      }
      std::vector<NodePtr> terms;
      for (const auto& [e, c] : n->poly.terms()) {
        std::vector<NodePtr> factors{make_const(c)};
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i]) factors.push_back(make_pow(vars, images[i], Rational(e[i])));
        terms.push_back(make_mul(vars, std::move(factors)));
      }
      return make_add(vars, std::move(terms));
    }
    case NodeKind::add:
    case NodeKind::mul: {
      std::vector<NodePtr> kids;
      for (const auto& c : n->children) kids.push_back(substitute_node(c, vars, images, all_poly));
      return n->kind == NodeKind::add ? make_add(vars, std::move(kids)) : make_mul(vars, std::move(kids));
    }
    case NodeKind::div:
      return make_div(vars, substitute_node(n->children[0], vars, images, all_poly),
                      substitute_node(n->children[1], vars, images, all_poly));
    case NodeKind::powrat:
      return make_pow(vars, substitute_node(n->children[0], vars, images, all_poly), n->exponent);
  }
  return n;
}

Rational origin_value(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::constant: return n->value;
    case NodeKind::poly: return n->poly.constant_term();
    case NodeKind::add: {
      Rational s = 0;
      for (const auto& c : n->children) s += origin_value(c);
      return s;
    }
    case NodeKind::mul: {
      Rational s = 1;
      for (const auto& c : n->children) s *= origin_value(c);
      return s;
    }
    case NodeKind::div: {
      Rational num = origin_value(n->children[0]);
      Rational den = origin_value(n->children[1]);
      if (den == 0)
        throw ValidationError(K::denominator_vanishes_at_origin,
                              "denominator " + serialize_node(n->children[1]) + " vanishes at the origin");
      return num / den;
    }
    case NodeKind::powrat: {
      Rational b = origin_value(n->children[0]);
      if (is_integer(n->exponent)) return pow(b, n->exponent.get_num().get_si());
      if (b != 1)
        throw ValidationError(K::pow_base_constant_term_not_one,
                              "base " + serialize_node(n->children[0]) + " has constant term " + to_string(b));
      return 1;
    }
  }
  return 0;
}

bool rational_node(const NodePtr& n) {
  if (n->kind == NodeKind::powrat && !is_integer(n->exponent)) return false;
  return std::all_of(n->children.begin(), n->children.end(), rational_node);
}

RationalFunction ratfunc_node(const NodePtr& n, const std::vector<std::string>& vars) {
  switch (n->kind) {
    case NodeKind::constant: return RationalFunction(MPoly::constant(vars, n->value));
    case NodeKind::poly: return RationalFunction(n->poly);
    case NodeKind::add: {
      RationalFunction r{MPoly(vars)};
      for (const auto& c : n->children) r = r + ratfunc_node(c, vars);
      return r;
    }
    case NodeKind::mul: {
      RationalFunction r(MPoly::constant(vars, 1));
      for (const auto& c : n->children) r = r * ratfunc_node(c, vars);
      return r;
    }
    case NodeKind::div: {
      RationalFunction a = ratfunc_node(n->children[0], vars);
      RationalFunction b = ratfunc_node(n->children[1], vars);
      RationalFunction r(a.num * b.denominator(), a.den);
      r.den.push_back(b.num);
      return r;
    }
    case NodeKind::powrat: {
      RationalFunction b = ratfunc_node(n->children[0], vars);
      unsigned k = static_cast<unsigned>(n->exponent.get_num().get_ui());
      RationalFunction r(b.num.pow(k));
      for (unsigned i = 0; i < k; ++i) r.den.insert(r.den.end(), b.den.begin(), b.den.end());
      return r;
    }
  }
  throw AlgorithmError("unreachable");
}

}  // namespace

std::string serialize(const AlgExpr& e) { return serialize_node(e.root()); }

AlgExpr with_variables(const AlgExpr& e, const std::vector<std::string>& vars) {
  return AlgExpr(vars, rebase_node(e.root(), vars));
}

AlgExpr substitute(const AlgExpr& e, const std::map<std::string, AlgExpr>& bindings) {
  const auto& vars = e.variables();
  std::vector<NodePtr> images;
  for (const auto& v : vars) images.push_back(make_poly(MPoly::variable(vars, v)));
  for (const auto& [name, im] : bindings) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw ValidationError(K::unknown_variable, "binding for undeclared variable " + name);
    if (im.variables() != vars)
      throw ValidationError(K::unknown_variable, "binding for " + name + " uses a different variable list");
    images[static_cast<std::size_t>(it - vars.begin())] = im.root();
  }
  bool all_poly = std::all_of(images.begin(), images.end(), is_polyish);
  return AlgExpr(vars, substitute_node(e.root(), vars, images, all_poly));
}

ValidatedExpr validate(const AlgExpr& e) {
  Rational origin = origin_value(e.root());
  return ValidatedExpr(e, origin);
}

ValidatedExpr parse_validated(const std::string& text, const std::vector<std::string>& variables) {
  return validate(parse_expr(text, variables));
}

bool is_rational_expr(const AlgExpr& e) { return rational_node(e.root()); }

RationalFunction to_rational_function(const AlgExpr& e) {
  if (!is_rational_expr(e))
    throw ValidationError(K::unsupported_shape, "expression has a non-integer power");
  return ratfunc_node(e.root(), e.variables());
}

}  // namespace diag
