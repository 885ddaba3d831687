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


#include <cctype>

#include "diag/errors.hpp"
#include "diag/hypergeom.hpp"

namespace diag {

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<Rational> parse_list(const std::string& body) {
  std::vector<Rational> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = body.find(',', start);
    out.push_back(parse_rational(body.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_scale(const std::string& s) {
  if (s.empty()) throw InputError("empty hypergeometric scale");
  Rational r = 1;
  std::size_t start = 0;
  for (;;) {
    std::size_t star = s.find('*', start);
    std::string tok = s.substr(start, star - start);
    std::size_t caret = tok.find('^');
    if (caret == std::string::npos) {
      r *= parse_rational(tok);
    } else {
      Rational base = parse_rational(tok.substr(0, caret));
      Integer e(tok.substr(caret + 1));
      if (!e.fits_slong_p()) throw InputError("scale exponent too large");
      r *= pow(base, e.get_si());
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return r;
}

}  // namespace

HypergeomSpec parse_hypergeom(const std::string& text) {
  std::string s = strip_ws(text);
  auto bad = [&](const std::string& why) { return InputError("malformed hypergeometric spec '" + text + "': " + why); };
  std::size_t f = s.find('F');
  if (f == std::string::npos || f == 0) throw bad("expected pFq prefix");
  std::size_t open = s.find('(', f);
  if (open == std::string::npos || s.back() != ')') throw bad("expected parentheses");
  unsigned long p, q;
  try {
    p = std::stoul(s.substr(0, f));
    q = std::stoul(s.substr(f + 1, open - f - 1));
  } catch (const std::exception&) {
    throw bad("expected pFq prefix");
  }
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  if (inner.size() < 5 || inner[0] != '[') throw bad("expected upper parameter list");
  std::size_t close1 = inner.find(']');
  if (close1 == std::string::npos || close1 + 2 >= inner.size() || inner[close1 + 1] != ',' || inner[close1 + 2] != '[')
    throw bad("expected lower parameter list");
  std::size_t close2 = inner.find(']', close1 + 3);
  if (close2 == std::string::npos) throw bad("unterminated lower parameter list");
  HypergeomSpec spec;
  try {
    spec.upper = parse_list(inner.substr(1, close1 - 1));
    spec.lower = parse_list(inner.substr(close1 + 3, close2 - close1 - 3));
    std::string rest = inner.substr(close2 + 1);
    if (!rest.empty()) {
      if (rest[0] != ';' && rest[0] != ',') throw bad("expected ';' before the scale");
      spec.scale = parse_scale(rest.substr(1));
    }
  } catch (const InputError& e) {
    throw bad(e.what());
  }
  if (spec.upper.size() != p || spec.lower.size() != q) throw bad("parameter counts do not match the pFq prefix");
  check_spec(spec);
  return spec;
}

std::string to_string(const HypergeomSpec& spec) {
  auto list = [](const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += to_string(v[i]);
    }
    return s + "]";
  };
  return std::to_string(spec.upper.size()) + "F" + std::to_string(spec.lower.size()) + "(" + list(spec.upper) + "," +
         list(spec.lower) + ";" + to_string(spec.scale) + ")";
}

void check_spec(const HypergeomSpec& spec) {
  for (const auto& b : spec.lower)
    if (is_integer(b) && b <= 0)
      throw ValidationError(ValidationError::Kind::lower_parameter_nonpositive_integer,
                            "lower parameter " + to_string(b) + " of " + to_string(spec));
}

UniSeries hyp_series(const HypergeomSpec& spec, std::size_t N) {
  check_spec(spec);
  UniSeries u("x", std::vector<Rational>(N + 1));
  Rational c = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    u.c[n] = c;
    if (n == N) break;
    Rational num = spec.scale, den = static_cast<unsigned long>(n + 1);
    for (const auto& a : spec.upper) num *= a + static_cast<unsigned long>(n);
    for (const auto& b : spec.lower) den *= b + static_cast<unsigned long>(n);
    c = c * num / den;
  }
  return u;
}

namespace {

std::vector<Rational> completed_lower(const HypergeomSpec& spec) {
  std::vector<Rational> b = spec.lower;
  if (b.size() + 1 == spec.upper.size()) b.push_back(1);
  return b;
}

}  // namespace

long height_raw(const HypergeomSpec& spec) {
  long h = 0;
  for (const auto& b : completed_lower(spec)) h += is_integer(b) ? 1 : 0;
  for (const auto& a : spec.upper) h -= is_integer(a) ? 1 : 0;
  return h;
}

long height(const HypergeomSpec& spec) {
  long h = height_raw(spec);
  for (const auto& b : spec.lower) h -= is_integer(b) ? 0 : 1;
  return h;
}

}  // namespace diag
