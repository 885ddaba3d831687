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


#include "diag/denef_lipshitz.hpp"

#include <algorithm>
#include <json.hpp>
#include <optional>

#include "diag/errors.hpp"

namespace diag {

namespace {

using VK = ValidationError::Kind;

std::string fresh_name(const std::string& want, const std::vector<std::string>& used) {
  auto taken = [&](const std::string& s) { return std::find(used.begin(), used.end(), s) != used.end(); };
  if (!taken(want)) return want;
  for (int i = 0;; ++i) {
    std::string s = want + "_" + std::to_string(i);
    if (!taken(s)) return s;
  }
}

std::optional<MPoly> node_poly(const NodePtr& n, const std::vector<std::string>& vars) {
  if (n->kind == NodeKind::poly) return n->poly;
  if (n->kind == NodeKind::constant) return MPoly::constant(vars, n->value);
  return std::nullopt;
}

struct Shape {
  MPoly R, Q;
  std::optional<std::pair<MPoly, Rational>> power;
};

void absorb(const NodePtr& n, bool in_den, const std::vector<std::string>& vars, Shape& s) {
  if (auto p = node_poly(n, vars)) {
    (in_den ? s.Q : s.R) = (in_den ? s.Q : s.R) * *p;
    return;
  }
  switch (n->kind) {
    case NodeKind::powrat: {
      auto base = node_poly(n->children[0], vars);
      if (!base || s.power)
        throw ValidationError(VK::unsupported_shape, "expected a single rational power of a polynomial");
      s.power = std::make_pair(*base, in_den ? Rational(-n->exponent) : n->exponent);
      return;
    }
    case NodeKind::mul:
      for (const auto& c : n->children) absorb(c, in_den, vars, s);
      return;
    case NodeKind::div:
      if (in_den) break;
      absorb(n->children[0], false, vars, s);
      absorb(n->children[1], true, vars, s);
      return;
    default:
      break;
  }
  throw ValidationError(VK::unsupported_shape, "expected the shape R * P^(a/b) / Q with polynomials P, Q, R");
}

// Renames variables of p (over `from`) onto `to` via the given name map.
MPoly rename(const MPoly& p, const std::vector<std::string>& to, const std::map<std::string, std::string>& map) {
  std::vector<MPoly> images;
  for (const auto& v : p.variables()) {
    auto it = map.find(v);
    std::string name = it == map.end() ? v : it->second;
    // A variable absent from the target list must not occur in p.
    bool present = std::find(to.begin(), to.end(), name) != to.end();
    images.push_back(present ? MPoly::variable(to, name) : MPoly(to));
  }
  return p.substitute(images);
}

MPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  AlgExpr e = parse_expr(text, vars);
  if (!e.is_polynomial()) throw InputError("expected a polynomial: " + text);
  return e.as_polynomial();
}

}  // namespace

MinPoly build_minpoly(const ValidatedExpr& e) {
  const auto& vars = e.variables();
  Shape s{MPoly::constant(vars, 1), MPoly::constant(vars, 1), std::nullopt};
  absorb(e.expr().root(), false, vars, s);
  MinPoly mp;
  mp.base = vars;
  mp.fvar = fresh_name("f", vars);
  std::vector<std::string> all = vars;
  all.push_back(mp.fvar);
  MPoly R = s.R.rebase(all), Q = s.Q.rebase(all);
  MPoly f = MPoly::variable(all, mp.fvar);
  if (!s.power) {
    mp.p = Q * f - R;
    return mp;
  }
  MPoly P = s.power->first.rebase(all);
  const Rational& ex = s.power->second;
  long a = ex.get_num().get_si();
  unsigned b = static_cast<unsigned>(ex.get_den().get_ui());
  MPoly Qf = (Q * f).pow(b);
  MPoly Rb = R.pow(b);
  if (a >= 0)
    mp.p = Qf - Rb * P.pow(static_cast<unsigned>(a));
  else
    mp.p = P.pow(static_cast<unsigned>(-a)) * Qf - Rb;
  return mp;
}

EtaleShift etale_shift(const MinPoly& mp, const Rational& f0) {
  const auto& all = mp.p.variables();
  std::vector<MPoly> images;
  for (const auto& v : all) {
    MPoly img = MPoly::variable(all, v);
    if (v == mp.fvar) img += MPoly::constant(all, f0);
    images.push_back(img);
  }
  EtaleShift es;
  es.f0 = f0;
  es.shifted = mp;
  es.shifted.p = mp.p.substitute(images);
  if (es.shifted.p.constant_term() != 0)
    throw AlgorithmError("EtaleFailure: the polynomial does not vanish at the origin for f0 = " + to_string(f0));
  Exponent e1(all.size(), 0);
  e1[static_cast<std::size_t>(es.shifted.p.index_of(mp.fvar))] = 1;
  es.derivative_at_origin = es.shifted.p.coefficient(e1);
  if (es.derivative_at_origin == 0)
    throw AlgorithmError("EtaleFailure: the f-derivative vanishes at the origin");
  return es;
}

RationalFunction dl_rational(const EtaleShift& es) {
  const MPoly& p = es.shifted.p;
  const auto& all = p.variables();
  std::size_t fi = static_cast<std::size_t>(p.index_of(es.shifted.fvar));
  MPoly f = MPoly::variable(all, es.shifted.fvar);
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < all.size(); ++i) images.push_back(i == fi ? f : MPoly::variable(all, all[i]) * f);
  MPoly A = p.derivative(fi).substitute(images);
  MPoly B = p.substitute(images);
  MPoly g = B.divide_exact(f);
  return RationalFunction(f * A + g * es.f0, {g});
}

RationalFunction dl_double(const RationalFunction& r, const std::string& t, const std::string& u,
                           const std::string& v) {
  const auto& vars = r.variables();
  if (std::find(vars.begin(), vars.end(), t) == vars.end()) throw ValidationError(VK::unknown_variable, t);
  std::vector<std::string> out;
  for (const auto& x : vars) {
    if (x == u || x == v) throw ValidationError(VK::bad_argument, "new variable name already in use: " + x);
    out.push_back(x == t ? u : x);
  }
  out.push_back(v);
  std::map<std::string, std::string> to_u{{t, u}}, to_v{{t, v}};
  std::size_t ti = static_cast<std::size_t>(r.num.index_of(t));
  MPoly U = MPoly::variable(out, u), V = MPoly::variable(out, v);
  MPoly left = U * rename(r.num, out, to_u), right = V * rename(r.num, out, to_v);
  std::vector<MPoly> den;
  std::vector<MPoly> den_u, den_v;
  for (const auto& d : r.den) {
    if (d.degree(ti) == 0) {
      den.push_back(rename(d, out, {}));
    } else {
      den_u.push_back(rename(d, out, to_u));
      den_v.push_back(rename(d, out, to_v));
    }
  }
  for (const auto& d : den_v) left = left * d;
  for (const auto& d : den_u) right = right * d;
  MPoly q = (left - right).divide_exact(U - V);
  den.insert(den.end(), den_u.begin(), den_u.end());
  den.insert(den.end(), den_v.begin(), den_v.end());
  return RationalFunction(q, den);
}

DLResult dl_full(const ValidatedExpr& e) {
  DLResult d;
  d.minpoly = build_minpoly(e);
  EtaleShift es = etale_shift(d.minpoly, e.value_at_origin());
  d.shift = es.f0;
  d.r_single = dl_rational(es);
  const auto& base = d.minpoly.base;
  std::size_t n = base.size();
  if (n == 1) {
    d.r = d.r_single;
    d.pairs = {{base[0], d.minpoly.fvar}};
    return d;
  }
  RationalFunction cur = d.r_single;
  std::string t = d.minpoly.fvar;
  std::vector<std::string> used = cur.variables();
  std::vector<std::string> us;
  std::string last_v;
  for (std::size_t s = 1; s < n; ++s) {
    std::string u = fresh_name("u" + std::to_string(s), used);
    used.push_back(u);
    std::string v = fresh_name("v" + std::to_string(s), used);
    used.push_back(v);
    cur = dl_double(cur, t, u, v);
    us.push_back(u);
    t = v;
    last_v = v;
  }
  d.r = cur;
  for (std::size_t i = 0; i + 1 < n; ++i) d.pairs.push_back({base[i], us[i]});
  d.pairs.push_back({base[n - 1], last_v});
  return d;
}

std::string DLResult::to_json() const {
  nlohmann::ordered_json j;
  j["variables"] = r.variables();
  nlohmann::ordered_json pj = nlohmann::ordered_json::array();
  for (const auto& [a, b] : pairs) pj.push_back({a, b});
  j["pairs"] = pj;
  j["shift"] = to_string(shift);
  j["minpoly"] = minpoly.p.to_string();
  j["numerator"] = r.num.to_string();
  std::vector<std::string> dens;
  for (const auto& f : r.den) dens.push_back(f.to_string());
  j["denominator_factors"] = dens;
  return j.dump();
}

DLResult dl_result_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed DL result JSON: ") + ex.what());
  }
  try {
    DLResult d;
    auto vars = j.at("variables").get<std::vector<std::string>>();
    for (const auto& p : j.at("pairs")) d.pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    d.shift = parse_rational(j.at("shift").get<std::string>());
    d.r.num = parse_polynomial(j.at("numerator").get<std::string>(), vars);
    for (const auto& f : j.at("denominator_factors")) d.r.den.push_back(parse_polynomial(f.get<std::string>(), vars));
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed DL result JSON: ") + ex.what());
  }
}

UniSeries dl_diagonal(const DLResult& d, std::uint32_t N) {
  std::vector<std::uint32_t> bounds(d.r.variables().size(), N);
  return diagonal(expand(d.r, bounds));
}

MultiSeries dl_reconstruct(const DLResult& d, const std::vector<std::uint32_t>& box) {
  const auto& vars = d.r.variables();
  if (box.size() != d.pairs.size()) throw ValidationError(VK::bad_argument, "box needs one bound per pair");
  std::vector<std::uint32_t> bounds(vars.size(), 0);
  auto idx = [&](const std::string& v) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
  };
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    bounds[idx(d.pairs[i].first)] = box[i];
    bounds[idx(d.pairs[i].second)] = box[i];
  }
  return partial_diagonal(expand(d.r, bounds), d.pairs);
}

bool dl_d_operator_check(const ValidatedExpr& e, const DLResult& d, const std::vector<std::uint32_t>& box) {
  std::vector<std::uint32_t> bounds = box;
  std::uint32_t total = 0;
  for (auto b : box) total += b;
  bounds.push_back(total);
  MultiSeries lhs = d_operator(expand(d.r_single, bounds), d.minpoly.fvar);
  return lhs == expand(e, box);
}

std::string printed_6var_fixture_text(long a, long b) {
  if (a <= 0 || b <= 0) throw ValidationError(VK::bad_argument, "fixture needs positive integers a, b");
  std::string A = std::to_string(a), B = std::to_string(b), A1 = std::to_string(a - 1);
  auto L = [](const std::string& s) { return "(1-" + s + "*x-" + s + "*y-" + s + "*z)"; };
  auto L2 = [](const std::string& s) { return "(1-" + s + "*x-" + s + "*y)"; };
  auto den = [&](const std::string& s, const std::string& p, const std::string& q) {
    return "((1+" + s + ")^" + A + "*" + L(s) + "^" + A + "-" + L2(s) + "^" + B + "*" + p + "*" + q + ")";
  };
  std::string t1 = A + "*u^3*v*" + L("u") + "*(1+u)^" + A1 + "*" + L("u") + "^" + A1 + "/" + den("u", "(u-v)", "(v-w)");
  std::string t2 = A + "*v^4*" + L("v") + "*((1+v)*" + L("v") + ")^" + A1 + "/" + den("v", "(u-v)", "(v-w)");
  std::string t3 = A + "*u^3*w*" + L("u") + "*((1+u)*" + L("u") + ")^" + A1 + "/" + den("u", "(u-w)", "(v-w)");
  std::string t4 = A + "*w^4*" + L("w") + "*(1+w)^" + A1 + "*" + L("w") + "^" + A1 + "/" + den("w", "(u-w)", "(v-w)");
  return t1 + "-" + t2 + "-" + t3 + "-" + t4 + "+1";
}

std::vector<RationalFunction> printed_6var_fixture(long a, long b) {
  if (a <= 0 || b <= 0) throw ValidationError(VK::bad_argument, "fixture needs positive integers a, b");
  const std::vector<std::string> vars = {"x", "y", "z", "u", "v", "w"};
  std::string text = printed_6var_fixture_text(a, b);
  AlgExpr e = parse_expr(text, vars);
  std::vector<RationalFunction> out;
  for (const auto& c : e.root()->children) {
    if (c->kind == NodeKind::constant || c->kind == NodeKind::poly)
      continue;
    out.push_back(to_rational_function(AlgExpr(vars, c)));
  }
  out.push_back(RationalFunction(MPoly::constant(vars, 1)));
  if (e.kind() != NodeKind::add || out.size() != 5) throw AlgorithmError("fixture did not parse into four terms");
  return out;
}

UniSeries fixture_diagonal(long a, long b, std::uint32_t N) {
  auto terms = printed_6var_fixture(a, b);
  std::vector<std::uint32_t> bounds(6, N);
  MultiSeries sum = expand(terms[0], bounds);
  for (std::size_t i = 1; i < terms.size(); ++i) sum = sum + expand(terms[i], bounds);
  return diagonal(sum);
}

}  // namespace diag
