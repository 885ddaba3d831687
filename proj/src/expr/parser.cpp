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

#include "diag/errors.hpp"
#include "diag/expr.hpp"

namespace diag {

namespace {

bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_char(char c) { return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    NodePtr first = term();
    if (negate) first = make_mul(vars_, {make_const(-1), first});
    std::vector<NodePtr> terms{first};
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      NodePtr t = term();
      terms.push_back(c == '-' ? make_mul(vars_, {make_const(-1), t}) : t);
    }
    return terms.size() == 1 ? terms[0] : make_add(vars_, std::move(terms));
  }

  NodePtr term() {
    NodePtr acc = factor();
    std::vector<NodePtr> product{acc};
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        product.push_back(factor());
      } else if (c == '/') {
        ++pos_;
        NodePtr num = product.size() == 1 ? product[0] : make_mul(vars_, product);
        product = {make_div(vars_, num, factor())};
      } else {
        break;
      }
    }
    return product.size() == 1 ? product[0] : make_mul(vars_, std::move(product));
  }

  NodePtr factor() {
    NodePtr b = base();
    if (!accept('^')) return b;
    std::size_t at = pos_;
    Rational exponent;
    if (accept('(')) {
      exponent = rational_literal("malformed rational exponent");
      if (!accept(')')) {
        pos_ = at;
        fail("malformed rational exponent");
      }
    } else {
      char c = peek();
      if (!(is_digit(c) || c == '-' || c == '+')) fail("malformed exponent");
      exponent = Rational(integer_literal(true));
    }
    return make_pow(vars_, b, exponent);
  }

  NodePtr base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        pos_ = start;
        throw ParseError("unknown variable '" + name + "'", start);
      }
      return make_poly(MPoly::variable(vars_, name));
    }
    if (is_digit(c) || ((c == '-' || c == '+') && pos_ + 1 < s_.size() && is_digit(s_[pos_ + 1])))
      return make_const(rational_literal("malformed rational"));
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Integer integer_literal(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    Integer z(s_.substr(digits, pos_ - digits), 10);
    return neg ? Integer(-z) : z;
  }

  // integer [ "/" positive-integer ], taken greedily.
  Rational rational_literal(const char* what) {
    skip();
    std::size_t start = pos_;
    Integer n;
    try {
      n = integer_literal(true);
    } catch (const ParseError&) {
      throw ParseError(what, start);
    }
    std::size_t save = pos_;
    if (accept('/')) {
      skip();
      if (pos_ < s_.size() && is_digit(s_[pos_])) {
        Integer d = integer_literal(false);
        if (d == 0) throw ParseError(std::string(what) + ": zero denominator", start);
        return make_rational(n, d);
      }
      pos_ = save;
    }
    return Rational(n);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgExpr parse_expr(const std::string& text, const std::vector<std::string>& variables) {
  for (const auto& v : variables) {
    if (v.empty() || !is_ident_start(v[0]) || !std::all_of(v.begin(), v.end(), is_ident_char))
      throw InputError("invalid variable name '" + v + "'");
  }
  Parser p(text, variables);
  return AlgExpr(variables, p.parse());
}

std::vector<std::string> scan_variables(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (is_ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string name = text.substr(i, j - i);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace diag
