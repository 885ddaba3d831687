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


#include <json.hpp>

#include "diag/errors.hpp"
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "diag/identity.hpp"

namespace diag {

using json = nlohmann::ordered_json;

Recipe Recipe::diag(std::string expr) {
  Recipe r;
  r.kind = Kind::diag;
  r.text = std::move(expr);
  return r;
}

Recipe Recipe::hyp(std::string spec) {
  Recipe r;
  r.kind = Kind::hyp;
  r.text = std::move(spec);
  return r;
}

Recipe Recipe::expr(std::string text) {
  Recipe r;
  r.kind = Kind::expr;
  r.text = std::move(text);
  return r;
}

Recipe Recipe::hadamard(std::vector<Recipe> parts) {
  Recipe r;
  r.kind = Kind::hadamard;
  r.children = std::move(parts);
  return r;
}

Recipe Recipe::product(std::vector<Recipe> parts) {
  Recipe r;
  r.kind = Kind::product;
  r.children = std::move(parts);
  return r;
}

Recipe Recipe::compose(Recipe outer, Recipe inner) {
  Recipe r;
  r.kind = Kind::compose;
  r.children = {std::move(outer), std::move(inner)};
  return r;
}

Recipe Recipe::rescale(Recipe inner, const Rational& c) {
  Recipe r;
  r.kind = Kind::rescale;
  r.children = {std::move(inner)};
  r.factor = c;
  return r;
}

namespace {

std::string join(const std::vector<Recipe>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += to_string(parts[i]);
  }
  return out;
}

void require_children(const Recipe& r, std::size_t lo, std::size_t hi, const char* what) {
  if (r.children.size() < lo || r.children.size() > hi)
    throw InputError(std::string(what) + ": wrong number of operands");
}

}  // namespace

std::string to_string(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::diag: return "Diag(" + r.text + ")";
    case Recipe::Kind::hyp: return r.text;
    case Recipe::Kind::expr: return r.text;
    case Recipe::Kind::hadamard: return "(" + join(r.children, " * ") + ")";
    case Recipe::Kind::product: return "(" + join(r.children, " . ") + ")";
    case Recipe::Kind::compose: return to_string(r.children.at(0)) + " o " + to_string(r.children.at(1));
    case Recipe::Kind::rescale: return to_string(r.children.at(0)) + " @ " + diag::to_string(r.factor) + "x";
  }
  return {};
}

UniSeries evaluate(const Recipe& r, std::size_t N) {
  auto n32 = static_cast<std::uint32_t>(N);
  switch (r.kind) {
    case Recipe::Kind::diag: {
      auto vars = scan_variables(r.text);
      if (vars.empty()) throw InputError("diagonal of a constant expression");
      auto e = parse_validated(r.text, vars);
      return diagonal(expand(e, std::vector<std::uint32_t>(vars.size(), n32)));
    }
    case Recipe::Kind::hyp:
      return hyp_series(parse_hypergeom(r.text), N);
    case Recipe::Kind::expr: {
      auto vars = scan_variables(r.text);
      if (vars.empty()) vars = {"x"};
      if (vars.size() != 1) throw InputError("univariate expression expected: " + r.text);
      auto u = uni_expand(parse_validated(r.text, vars), n32);
      u.var = "x";
      return u;
    }
    case Recipe::Kind::hadamard:
    case Recipe::Kind::product: {
      require_children(r, 1, SIZE_MAX, "hadamard/product");
      UniSeries acc = evaluate(r.children[0], N);
      for (std::size_t i = 1; i < r.children.size(); ++i) {
        UniSeries next = evaluate(r.children[i], N);
        acc = r.kind == Recipe::Kind::hadamard ? hadamard(acc, next) : uni_mul(acc, next);
      }
      return acc;
    }
    case Recipe::Kind::compose:
      require_children(r, 2, 2, "compose");
      return compose(evaluate(r.children[0], N), evaluate(r.children[1], N));
    case Recipe::Kind::rescale:
      require_children(r, 1, 1, "rescale");
      return rescale(evaluate(r.children[0], N), r.factor);
  }
  throw InputError("unknown recipe kind");
}

namespace {

json recipe_json(const Recipe& r) {
  json j = json::object();
  auto list = [&](const char* key) {
    json a = json::array();
    for (const auto& c : r.children) a.push_back(recipe_json(c));
    j[key] = a;
  };
  switch (r.kind) {
    case Recipe::Kind::diag: j["diag"] = r.text; break;
    case Recipe::Kind::hyp: j["hyp"] = r.text; break;
    case Recipe::Kind::expr: j["expr"] = r.text; break;
    case Recipe::Kind::hadamard: list("hadamard"); break;
    case Recipe::Kind::product: list("product"); break;
    case Recipe::Kind::compose: list("compose"); break;
    case Recipe::Kind::rescale:
      j["rescale"] = recipe_json(r.children.at(0));
      j["by"] = to_string(r.factor);
      break;
  }
  return j;
}

Recipe recipe_from(const json& j) {
  if (!j.is_object()) throw InputError("recipe must be a JSON object");
  auto children = [&](const char* key) {
    const auto& a = j.at(key);
    if (!a.is_array()) throw InputError(std::string(key) + " expects an array");
    std::vector<Recipe> out;
    for (const auto& c : a) out.push_back(recipe_from(c));
    return out;
  };
  if (j.contains("diag")) return Recipe::diag(j.at("diag").get<std::string>());
  if (j.contains("hyp")) return Recipe::hyp(j.at("hyp").get<std::string>());
  if (j.contains("expr")) return Recipe::expr(j.at("expr").get<std::string>());
  if (j.contains("hadamard")) return Recipe::hadamard(children("hadamard"));
  if (j.contains("product")) return Recipe::product(children("product"));
  if (j.contains("compose")) {
    auto c = children("compose");
    if (c.size() != 2) throw InputError("compose expects [outer, inner]");
    return Recipe::compose(std::move(c[0]), std::move(c[1]));
  }
  if (j.contains("rescale"))
    return Recipe::rescale(recipe_from(j.at("rescale")), parse_rational(j.at("by").get<std::string>()));
  throw InputError("unknown recipe: " + j.dump());
}

}  // namespace

std::string cases_to_json(const std::vector<IdentityCase>& cases) {
  json out = json::array();
  for (const auto& c : cases) {
    json j;
    j["name"] = c.name;
    j["N"] = c.N;
    j["expect"] = c.expect == Expect::match ? "match" : "report";
    json sides = json::array();
    for (const auto& s : c.sides) sides.push_back(recipe_json(s));
    j["sides"] = sides;
    if (!c.variants.empty()) {
      json vs = json::array();
      for (const auto& v : c.variants) vs.push_back({{"label", v.label}, {"side", recipe_json(v.side)}});
      j["variants"] = vs;
    }
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::vector<IdentityCase> cases_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("case file: ") + e.what(), e.byte);
  }
  if (!in.is_array()) throw InputError("case file must hold a JSON array");
  std::vector<IdentityCase> out;
  try {
    for (const auto& j : in) {
      IdentityCase c;
      c.name = j.at("name").get<std::string>();
      c.N = j.value("N", std::size_t{20});
      std::string ex = j.value("expect", std::string("match"));
      if (ex != "match" && ex != "report") throw InputError("expect must be match or report");
      c.expect = ex == "match" ? Expect::match : Expect::report;
      for (const auto& s : j.at("sides")) c.sides.push_back(recipe_from(s));
      if (c.sides.size() < 2) throw InputError("case " + c.name + " needs at least two sides");
      if (j.contains("variants"))
        for (const auto& v : j.at("variants"))
          c.variants.push_back({v.at("label").get<std::string>(), recipe_from(v.at("side"))});
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("case file: ") + e.what());
  }
  return out;
}

}  // namespace diag
