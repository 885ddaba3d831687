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


#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "diag/denef_lipshitz.hpp"
#include "diag/errors.hpp"
#include "diag/expr.hpp"
#include "diag/hypergeom.hpp"
#include "diag/identity.hpp"
#include "diag/kernels.hpp"
#include "diag/modp.hpp"
#include "diag/series.hpp"
#include "diag/zeilberger.hpp"

namespace diagtool {

using namespace diag;
using json = nlohmann::ordered_json;

namespace {

// Data sink: a file when --output is given, stdout otherwise.
class Out {
 public:
  explicit Out(const std::string& path, bool binary = false) {
    if (!path.empty()) {
      file_.open(path, binary ? std::ios::binary : std::ios::out);
      if (!file_) throw InputError("cannot open output file " + path);
    }
  }
  std::ostream& operator()() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json provenance(const RunConfig& c) { return {{"tool", "diagtool"}, {"version", DIAG_VERSION}, {"command", c.command_line}}; }

std::string provenance_line(const RunConfig& c) {
  return "# diagtool " DIAG_VERSION " :: " + c.command_line + "\n";
}

void progress(const RunConfig& c, const std::string& msg) {
  if (!c.quiet) std::cerr << "diagtool: " << msg << std::endl;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::pair<long, long> parse_pair(const std::string& s, const char* what) {
  auto parts = split(s);
  if (parts.size() != 2) throw InputError(std::string(what) + " expects two integers a,b");
  try {
    return {std::stol(parts[0]), std::stol(parts[1])};
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " expects two integers a,b");
  }
}

std::vector<std::string> variables_for(const RunConfig& c) {
  return c.vars.empty() ? scan_variables(c.expr) : split(c.vars);
}

Recipe recipe_of(const std::string& text) {
  static const std::regex hyp(R"(^\s*\d+F\d+\s*\()");
  return std::regex_search(text, hyp) ? Recipe::hyp(text) : Recipe::expr(text);
}

json coefficients_json(const UniSeries& u) {
  json a = json::array();
  for (const auto& q : u.c) a.push_back(to_string(q));
  return a;
}

int print_series(const RunConfig& c, const UniSeries& u, json extra = json::object()) {
  Out out(c.output);
  if (c.json) {
    json j;
    j["provenance"] = provenance(c);
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["coefficients"] = coefficients_json(u);
    out() << j.dump() << "\n";
    return kOk;
  }
  out() << provenance_line(c);
  for (std::size_t i = 0; i < u.c.size(); ++i) out() << (i ? ", " : "") << to_string(u.c[i]);
  out() << "\n";
  return kOk;
}

std::uint32_t order32(std::size_t n) {
  if (n > 1'000'000'000) throw ValidationError(ValidationError::Kind::bad_argument, "order too large");
  return static_cast<std::uint32_t>(n);
}

}  // namespace

int cmd_expand(const RunConfig& c) {
  auto vars = variables_for(c);
  auto e = parse_validated(c.expr, vars);
  auto s = expand(e, std::vector<std::uint32_t>(vars.size(), order32(c.order)));
  json j;
  j["provenance"] = provenance(c);
  j["series"] = json::parse(to_json(s));
  Out out(c.output);
  out() << j.dump() << "\n";
  return kOk;
}

int cmd_diag(const RunConfig& c) {
  auto vars = variables_for(c);
  auto e = parse_validated(c.expr, vars);
  progress(c, "expanding on a box of side " + std::to_string(c.order + 1) + " in " + std::to_string(vars.size()) +
                  " variables");
  auto d = diagonal(expand(e, std::vector<std::uint32_t>(vars.size(), order32(c.order))));
  return print_series(c, rescale(d, parse_rational(c.scale)), {{"expression", c.expr}, {"scale", c.scale}});
}

int cmd_hadamard(const RunConfig& c) {
  auto h = evaluate(Recipe::hadamard({recipe_of(c.left), recipe_of(c.right)}), c.order);
  return print_series(c, rescale(h, parse_rational(c.scale)), {{"left", c.left}, {"right", c.right}});
}

int cmd_hyp(const RunConfig& c) {
  auto spec = parse_hypergeom(c.spec);
  auto u = hyp_series(spec, c.order);
  return print_series(c, rescale(u, parse_rational(c.scale)),
                      {{"spec", to_string(spec)}, {"height", height(spec)}});
}

int cmd_gb(const RunConfig& c) {
  auto spec = parse_hypergeom(c.spec);
  auto w = globally_bounded_witness(hyp_series(spec, c.terms), Integer(c.c_max), Integer(c.d_max));
  auto v = gb_heuristic(spec, c.heuristic_terms, c.prime_bound);
  json j;
  j["provenance"] = provenance(c);
  j["spec"] = to_string(spec);
  j["terms"] = c.terms;
  if (w)
    j["witness"] = {{"c", w->c.get_str()}, {"d", w->d.get_str()}};
  else
    j["witness"] = nullptr;
  j["likely_unbounded"] = v.likely_unbounded;
  json ev = json::array();
  for (const auto& e : v.evidence) ev.push_back({{"prime", e.prime.get_str()}, {"first_index", e.first_index}});
  j["evidence"] = ev;
  Out out(c.output);
  out() << j.dump() << "\n";
  return kOk;
}

int cmd_factorize(const RunConfig& c) {
  auto ps = split(c.params);
  if (ps.size() != 4) throw InputError("--params expects a,b,c,e for 3F2([a,b,c],[e,1])");
  auto rep = hadamard_factorizations(parse_rational(ps[0]), parse_rational(ps[1]), parse_rational(ps[2]),
                                     parse_rational(ps[3]), c.heuristic_terms, c.prime_bound);
  json j;
  j["provenance"] = provenance(c);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json ev = json::array();
    for (const auto& p : e.verdict.evidence) ev.push_back({{"prime", p.prime.get_str()}, {"first_index", p.first_index}});
    entries.push_back({{"decomposition", e.decomposition},
                       {"factor", to_string(e.tested_factor)},
                       {"identity_holds", e.identity_holds},
                       {"likely_unbounded", e.verdict.likely_unbounded},
                       {"evidence", ev}});
  }
  j["entries"] = entries;
  j["route_found"] = rep.route_found;
  Out out(c.output);
  out() << j.dump(2) << "\n";
  return kOk;
}

int cmd_dl(const RunConfig& c) {
  if (!c.fixture.empty()) {
    auto [a, b] = parse_pair(c.fixture, "--fixture");
    progress(c, "expanding the printed six-variable function on a box of side " + std::to_string(c.verify_order + 1));
    auto rep = fixture_report(a, b, c.verify_order);
    Out out(c.output);
    out() << json{{"provenance", provenance(c)}}.dump() << "\n" << to_json_line(rep) << "\n";
    return rep.error.empty() ? (rep.mismatch ? kMismatch : kOk) : kMismatch;
  }
  auto vars = variables_for(c);
  auto e = parse_validated(c.expr, vars);
  DLResult res;
  if (!c.load.empty()) {
    std::ifstream in(c.load);
    if (!in) throw InputError("cannot read " + c.load);
    std::stringstream ss;
    ss << in.rdbuf();
    auto doc = json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded()) throw InputError(c.load + " is not JSON");
    res = dl_result_from_json(doc.contains("result") ? doc["result"].dump() : doc.dump());
  } else {
    progress(c, "building the rational function");
    res = dl_full(e);
  }
  json j = json::parse(res.to_json());
  json ver;
  bool ok = true;
  if (c.verify_order > 0) {
    progress(c, "comparing diagonals through order " + std::to_string(c.verify_order));
    auto lhs = dl_diagonal(res, order32(c.verify_order));
    auto rhs = diagonal(expand(e, std::vector<std::uint32_t>(vars.size(), order32(c.verify_order))));
    auto m = first_mismatch(lhs, rhs);
    ver["diagonal_order"] = c.verify_order;
    ver["diagonal"] = m ? "mismatch" : "match";
    if (m) ver["diagonal_first_mismatch"] = *m;
    ok = ok && !m;
  }
  if (!c.box.empty()) {
    std::vector<std::uint32_t> box;
    for (const auto& s : split(c.box)) box.push_back(order32(std::stoul(s)));
    if (box.size() != vars.size()) throw InputError("--box needs one bound per variable");
    progress(c, "reconstructing the expansion from partial diagonals");
    bool rec = dl_reconstruct(res, box) == expand(e, box);
    bool dop = dl_d_operator_check(e, res, box);
    ver["box"] = c.box;
    ver["reconstruction"] = rec ? "match" : "mismatch";
    ver["d_operator"] = dop ? "match" : "mismatch";
    ok = ok && rec && dop;
  }
  json top;
  top["provenance"] = provenance(c);
  top["result"] = j;
  top["verification"] = ver;
  Out out(c.output);
  out() << top.dump() << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_ode_check(const RunConfig& c) {
  auto ode = ode_family(c.a, c.b);
  auto f = hyp_series(family_spec(c.a, c.b), c.order + ode.order());
  auto res = ode_apply(ode, f);
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < res.c.size() && !bad; ++i)
    if (res.c[i] != 0) bad = i;
  Out out(c.output);
  out() << provenance_line(c);
  if (bad)
    out() << "nonzero coefficient at degree " << *bad << ": " << to_string(res.c[*bad]) << "\n";
  else
    out() << "annihilated through degree " << res.order() << "\n";
  return bad ? kMismatch : kOk;
}

int cmd_recu_check(const RunConfig& c) {
  bool sym = recurrence_verify_symbolic();
  auto rec = family_recurrence(c.a, c.b);
  auto f = hyp_series(family_spec(c.a, c.b), c.order + rec.order());
  std::optional<std::size_t> bad;
  for (std::size_t n = 0; n + rec.order() <= f.order() && !bad; ++n) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= rec.order(); ++i) acc += rec.Q[i].evaluate({Rational(static_cast<long>(n))}) * f.c[n + i];
    if (acc != 0) bad = n;
  }
  Out out(c.output);
  out() << provenance_line(c);
  out() << "symbolic identity: " << (sym ? "holds" : "fails") << "\n";
  for (std::size_t i = 0; i <= rec.order(); ++i) out() << "Q" << i << " = " << rec.Q[i].to_string() << "\n";
  if (bad)
    out() << "recurrence fails at n = " << *bad << "\n";
  else
    out() << "recurrence holds for n <= " << c.order << "\n";
  return sym && !bad ? kOk : kMismatch;
}

int cmd_zeilberger(const RunConfig& c) {
  HyperTerm t;
  if (!c.term.empty())
    t = parse_hyperterm(c.term);
  else
    t = family_summand(c.a, c.b);
  progress(c, "creative telescoping on " + t.to_string());
  auto z = zeilberger(t, c.max_order);
  auto grid = default_grid(t, z.rec, z.cert, c.verify_n, 3 * c.verify_n + 4);
  bool ok = certificate_verify(t, z.rec, z.cert, grid, c.verify_n);
  Out out(c.output);
  out() << provenance_line(c);
  out() << "term: " << t.to_string() << "\n";
  out() << "order: " << z.rec.order() << "\n";
  for (std::size_t i = 0; i <= z.rec.order(); ++i) out() << "sigma" << i << " = " << z.rec.Q[i].to_string() << "\n";
  out() << "certificate: " << z.cert.to_string() << "\n";
  out() << "verified on " << grid.size() << " grid points and sums for n <= " << c.verify_n << ": "
        << (ok ? "yes" : "no") << "\n";
  return ok ? kOk : kMismatch;
}

namespace {

ModPoly parse_modpoly(const std::string& text, std::uint64_t m) {
  auto e = parse_expr(text, {"x"});
  if (!is_rational_expr(e)) throw InputError("polynomial expected: " + text);
  auto rf = to_rational_function(e);
  Rational den = 1;
  for (const auto& d : rf.den) {
    if (!d.is_constant()) throw InputError("polynomial expected: " + text);
    den *= d.constant_term();
  }
  ModPoly out;
  Integer M = static_cast<unsigned long>(m);
  for (const auto& [ex, q] : rf.num.terms()) {
    Rational v = q / den;
    Integer inv;
    Integer d = v.get_den();
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t()) == 0)
      throw ValidationError(ValidationError::Kind::non_integral_coefficient, "coefficient not a unit mod p: " + text);
    Integer r = v.get_num() * inv;
    std::size_t k = ex.empty() ? 0 : ex[0];
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] = mpz_fdiv_ui(Integer(r).get_mpz_t(), m);
  }
  return out;
}

FunctionalEq parse_functional_eq(const std::string& text, std::uint64_t p, std::uint64_t m) {
  static const std::regex re(R"(^\s*(Multiplicative|Affine)\s*\(\s*(\d+)\s*,\s*(.+)\)\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re))
    throw ParseError("expected Multiplicative(q, A) or Affine(q, A): " + text, 0);
  FunctionalEq eq;
  eq.kind = mt[1] == "Multiplicative" ? FunctionalEq::Kind::multiplicative : FunctionalEq::Kind::affine;
  eq.p = p;
  std::uint64_t q = std::stoull(mt[2]), acc = 1;
  eq.s = 0;
  while (acc < q) {
    acc *= p;
    ++eq.s;
  }
  if (acc != q || q < p) throw ValidationError(ValidationError::Kind::bad_argument, "q must be a positive power of p");
  eq.A = parse_modpoly(mt[3], m);
  return eq;
}

int report_relation(const RunConfig& c, std::ostream& os, const ModPSeries& F, const FunctionalEq& eq) {
  progress(c, "verifying " + eq.to_string() + " through degree " + std::to_string(F.degree()));
  auto v = verify_relation(F, eq, F.degree());
  os << eq.to_string() << "\n";
  if (v.ok) {
    os << "verified through degree " << F.degree() << "\n";
    return kOk;
  }
  os << "fails at degree " << (v.first_failure ? std::to_string(*v.first_failure) : "?") << "\n";
  return kMismatch;
}

}  // namespace

int cmd_modp(const RunConfig& c) {
  if (!c.isa.empty()) {
    if (c.isa == "scalar")
      kernels::set_isa(kernels::Isa::scalar);
    else if (c.isa == "avx2")
      kernels::set_isa(kernels::Isa::avx2);
    else
      throw ValidationError(ValidationError::Kind::bad_argument, "--isa is scalar or avx2");
  }
  auto spec = parse_hypergeom(c.spec);
  unsigned K = c.precision ? c.precision : default_precision();
  progress(c, "reducing " + to_string(spec) + " mod " + std::to_string(c.p) + "^" + std::to_string(c.r) +
                  " through degree " + std::to_string(c.N) + " (" + kernels::isa_name(kernels::active_isa()) + ")");
  auto F = hyp_series_mod(spec, c.p, c.r, c.N, K);
  if (!c.derive.empty()) {
    auto parts = split(c.derive);
    if (parts.size() != 2) throw InputError("--derive expects c0,scale");
    F = derived_series(F, std::stoull(parts[0]), parse_rational(parts[1]));
  }
  bool report = c.guess || c.minpoly || !c.verify_eq.empty();
  if (!report) {
    if (c.format == "binary") {
      Out out(c.output, true);
      out() << modp_to_binary(F);
    } else if (c.format == "sparse") {
      Out out(c.output);
      out() << provenance_line(c) << modp_to_sparse_text(F);
    } else {
      throw ValidationError(ValidationError::Kind::bad_argument, "--format is sparse or binary");
    }
    return kOk;
  }
  Out out(c.output);
  out() << provenance_line(c);
  int code = kOk;
  if (!c.verify_eq.empty()) code = std::max(code, report_relation(c, out(), F, parse_functional_eq(c.verify_eq, F.p, F.modulus())));
  if (c.guess) {
    progress(c, "guessing a Mahler-type equation");
    auto g = guess_mahler(F, c.s_max, c.deg_max);
    if (g) {
      code = std::max(code, report_relation(c, out(), F, *g));
    } else {
      out() << "no Mahler-type equation with s <= " << c.s_max << " and deg A <= " << c.deg_max << "\n";
      code = kMismatch;
    }
  }
  if (c.minpoly) {
    progress(c, "guessing a polynomial relation");
    auto g = guess_minpoly_mod(F, c.minpoly_d, c.minpoly_D);
    if (g) {
      code = std::max(code, report_relation(c, out(), F, *g));
    } else {
      out() << "no polynomial relation with degree in F <= " << c.minpoly_d << " and in x <= " << c.minpoly_D << "\n";
      code = kMismatch;
    }
  }
  return code;
}

int cmd_identities(const RunConfig& c) {
  std::vector<IdentityCase> cases;
  bool builtin = c.cases.empty();
  if (builtin) {
    if (c.suite != "builtin") throw ValidationError(ValidationError::Kind::bad_argument, "unknown suite " + c.suite);
    cases = builtin_suite();
  } else {
    std::ifstream in(c.cases);
    if (!in) throw InputError("cannot read " + c.cases);
    std::stringstream ss;
    ss << in.rdbuf();
    cases = cases_from_json(ss.str());
  }
  if (!c.dump_cases.empty()) {
    std::ofstream d(c.dump_cases);
    if (!d) throw InputError("cannot write " + c.dump_cases);
    d << cases_to_json(cases);
  }
  progress(c, "running " + std::to_string(cases.size()) + " cases on " + std::to_string(c.threads) + " threads");
  auto reports = run_cases(cases, c.threads);
  if (builtin && c.fixture_report) {
    progress(c, "expanding the printed six-variable fixture");
    reports.push_back(fixture_report(1, 3, 4));
  }
  Out out(c.output);
  out() << json{{"provenance", provenance(c)}}.dump() << "\n";
  int code = kOk;
  for (const auto& r : reports) {
    out() << to_json_line(r) << "\n";
    if (r.failed()) code = kMismatch;
  }
  return code;
}

}  // namespace diagtool
