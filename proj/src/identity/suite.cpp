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
#include <atomic>
#include <thread>

#include <json.hpp>

#include "diag/denef_lipshitz.hpp"
#include "diag/errors.hpp"
#include "diag/hypergeom.hpp"
#include "diag/identity.hpp"

namespace diag {

namespace {

std::optional<Mismatch> compare(const UniSeries& a, const UniSeries& b, std::size_t N, std::size_t side) {
  if (a.c.size() <= N || b.c.size() <= N) throw AlgorithmError("side expanded below the requested order");
  for (std::size_t i = 0; i <= N; ++i)
    if (a.c[i] != b.c[i]) return Mismatch{side, i, a.c[i], b.c[i]};
  return std::nullopt;
}

}  // namespace

Report check(const IdentityCase& c) {
  if (c.sides.size() < 2) throw InputError("identity case " + c.name + " needs at least two sides");
  Report r;
  r.name = c.name;
  r.order = c.N;
  r.expect = c.expect;
  UniSeries lhs = evaluate(c.sides[0], c.N);
  for (std::size_t s = 1; s < c.sides.size() && !r.mismatch; ++s)
    r.mismatch = compare(lhs, evaluate(c.sides[s], c.N), c.N, s);
  for (const auto& v : c.variants)
    r.variants.push_back({v.label, compare(lhs, evaluate(v.side, c.N), c.N, 1)});
  return r;
}

std::vector<Report> run_cases(const std::vector<IdentityCase>& cases, unsigned threads) {
  std::vector<Report> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) {
      try {
        out[i] = check(cases[i]);
      } catch (const std::exception& e) {
        out[i].name = cases[i].name;
        out[i].order = cases[i].N;
        out[i].expect = cases[i].expect;
        out[i].error = e.what();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.name < b.name; });
  return out;
}

std::string to_json_line(const Report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = !r.error.empty() ? "error" : r.mismatch ? "mismatch" : "match";
  j["expect"] = r.expect == Expect::match ? "match" : "report";
  if (r.mismatch) {
    j["first_mismatch"] = r.mismatch->index;
    j["side"] = r.mismatch->side;
    j["lhs"] = to_string(r.mismatch->lhs);
    j["rhs"] = to_string(r.mismatch->rhs);
  }
  j["order"] = r.order;
  if (!r.variants.empty()) {
    auto vs = nlohmann::ordered_json::array();
    for (const auto& v : r.variants) {
      nlohmann::ordered_json o;
      o["label"] = v.label;
      o["status"] = v.mismatch ? "mismatch" : "match";
      if (v.mismatch) {
        o["first_mismatch"] = v.mismatch->index;
        o["lhs"] = to_string(v.mismatch->lhs);
        o["rhs"] = to_string(v.mismatch->rhs);
      }
      vs.push_back(o);
    }
    j["variants"] = vs;
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

namespace {

using R = Recipe;

IdentityCase make(std::string name, std::vector<Recipe> sides, std::size_t N, Expect e = Expect::match) {
  IdentityCase c;
  c.name = std::move(name);
  c.sides = std::move(sides);
  c.N = N;
  c.expect = e;
  return c;
}

Recipe split(const char* alg, const char* hyp) { return R::hadamard({R::expr(alg), R::hyp(hyp)}); }

}  // namespace

std::vector<IdentityCase> builtin_suite() {
  std::vector<IdentityCase> s;

  s.push_back(make("diag-cuberoot-3F2",
                   {R::hyp("3F2([2/9,5/9,8/9],[2/3,1];27)"), R::diag("(1-x-y)^(1/3)/(1-x-y-z)")}, 10));
  s.push_back(make("diag-twothirds-3F2",
                   {R::hyp("3F2([1/9,4/9,7/9],[1/3,1];27)"), R::diag("(1-x-y)^(2/3)/(1-x-y-z)")}, 10));

  s.push_back(make("close-2y-twothirds-3F2",
                   {R::diag("(1-x-2*y)^(2/3)/(1-x-y-z)"), R::hyp("3F2([1/9,4/9,7/9],[2/3,1];27)")}, 10,
                   Expect::report));
  s.push_back(make("close-2y-cuberoot-3F2",
                   {R::diag("(1-x-2*y)^(1/3)/(1-x-y-z)"), R::hyp("3F2([2/9,5/9,8/9],[5/6,1];27)")}, 10,
                   Expect::report));
  s.push_back(make("close-x-cuberoot-4F3",
                   {R::diag("(1-x)^(1/3)/(1-x-y-z)"), R::hyp("4F3([2/9,5/9,8/9,1/2],[1/3,5/6,1];27)")}, 10,
                   Expect::report));
  s.push_back(make("close-xy-over-xz-4F3",
                   {R::diag("(1-x-y)^(1/3)/(1-x-z)"), R::hyp("4F3([2/9,5/9,8/9,-1/3],[1/3,5/6,1];27)")}, 10,
                   Expect::report));

  s.push_back(make("height3-cuberoot-cube",
                   {R::hyp("3F2([1/3,1/3,1/3],[1,1];1)"),
                    R::hadamard({R::expr("(1-x)^(-1/3)"), R::expr("(1-x)^(-1/3)"), R::expr("(1-x)^(-1/3)")}),
                    R::diag("(1-x)^(-1/3)*(1-y)^(-1/3)*(1-z)^(-1/3)")},
                   12));

  s.push_back(make("hadamard-729-ninth",
                   {R::hyp("3F2([1/9,4/9,7/9],[4/3,1];729)"), split("(1-x)^(-1/9)", "2F1([4/9,7/9],[4/3];729)")},
                   15));
  auto r1 = make("hadamard-729-seven-ninths",
                 {R::hyp("3F2([2/9,5/9,7/9],[2/3,1];729)"), split("(1-x)^(-7/9)", "2F1([2/9,5/9],[2/3];729)")}, 15,
                 Expect::report);
  r1.variants.push_back({"scale on the algebraic factor", split("(1-729*x)^(-7/9)", "2F1([2/9,5/9],[2/3];1)")});
  r1.variants.push_back({"scale 27 on the 2F1", split("(1-x)^(-7/9)", "2F1([2/9,5/9],[2/3];27)")});
  s.push_back(std::move(r1));
  s.push_back(make("hadamard-27-eight-ninths",
                   {R::hyp("3F2([4/9,5/9,8/9],[2/3,1];27)"), split("(1-x)^(-8/9)", "2F1([4/9,5/9],[2/3];27)")}, 15));
  s.push_back(make("hadamard-2401-four-sevenths",
                   {R::hyp("3F2([1/7,2/7,4/7],[1/2,1];2401)"), split("(1-x)^(-4/7)", "2F1([1/7,2/7],[1/2];2401)")},
                   15));

  // 2F1([2/9,5/9],[2/3],27x) through the degree-4 pullback, then the Pfaff step.
  const char* pre1 = "(1-27*x)^(-1/9)";
  const char* pre2 = "(1-36*x+216*x^2)^(-1/18)";
  const char* y = "-1728*x^3*(1-27*x)/(1-36*x+216*x^2)^2";
  const char* one_minus_y = "(1+1728*x^3*(1-27*x)/(1-36*x+216*x^2)^2)^(-1/36)";
  const char* pfaff = "1728*x^3*(1-27*x)/((1-36*x+216*x^2)^2+1728*x^3*(1-27*x))";
  s.push_back(make("shimura-pullback-chain",
                   {R::hyp("2F1([2/9,5/9],[2/3];27)"),
                    R::product({R::expr(pre1), R::expr(pre2), R::compose(R::hyp("2F1([1/36,19/36],[8/9];1)"), R::expr(y))}),
                    R::product({R::expr(pre1), R::expr(pre2), R::expr(one_minus_y),
                                R::compose(R::hyp("2F1([1/36,13/36],[8/9];1)"), R::expr(pfaff))})},
                   25));

  s.push_back(make("4F3-hadamard-triple",
                   {R::hyp("4F3([1/9,4/9,5/9,7/9],[1/3,1,1];27)"),
                    split("(1-x)^(-5/9)", "3F2([1/9,4/9,7/9],[1/3,1];27)"),
                    split("(1-x)^(-7/9)", "3F2([1/9,4/9,5/9],[1/3,1];27)")},
                   20));
  return s;
}

Report fixture_report(long a, long b, std::size_t N) {
  Report r;
  r.name = "fixture-six-variable-" + std::to_string(a) + "-" + std::to_string(b);
  r.order = N;
  r.expect = Expect::report;
  try {
    r.mismatch = compare(fixture_diagonal(a, b, static_cast<std::uint32_t>(N)), hyp_series(family_spec(a, b), N), N, 1);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace diag
