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


#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "diag/errors.hpp"

namespace {

std::string quote(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\"'()[];*$\\|&<>^") == std::string::npos) return s;
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace diagtool;
  RunConfig c;
  for (int i = 0; i < argc; ++i) c.command_line += (i ? " " : "") + quote(argv[i]);
  c.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Exact diagonals, hypergeometric series and mod-p guessing"};
  app.set_version_flag("--version", std::string("diagtool ") + DIAG_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", c.output, "Write data to this file instead of stdout");
  app.add_option("-j,--threads", c.threads, "Worker threads (identities)")->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", c.quiet, "No progress messages on stderr");

  auto series_opts = [&](CLI::App* s) {
    s->add_option("--order", c.order, "Truncation order N");
    s->add_option("--scale", c.scale, "Print coefficients of f(scale*x)");
    s->add_flag("--json", c.json, "JSON output");
  };

  auto* expand = app.add_subcommand("expand", "Expand an expression on a box [0,N]^n as JSON");
  expand->add_option("--expr", c.expr, "Expression")->required();
  expand->add_option("--vars", c.vars, "Variable order, comma separated");
  expand->add_option("--order", c.order, "Bound per variable");

  auto* diagc = app.add_subcommand("diag", "Diagonal coefficients of an expression");
  diagc->add_option("--expr", c.expr, "Expression")->required();
  diagc->add_option("--vars", c.vars, "Variable order, comma separated");
  series_opts(diagc);

  auto* had = app.add_subcommand("hadamard", "Hadamard product of two univariate series");
  had->add_option("--left", c.left, "pFq spec or expression in x")->required();
  had->add_option("--right", c.right, "pFq spec or expression in x")->required();
  series_opts(had);

  auto* hyp = app.add_subcommand("hyp", "Coefficients of a pFq series");
  hyp->add_option("--spec", c.spec, "e.g. 3F2([2/9,5/9,8/9],[2/3,1];27)")->required();
  series_opts(hyp);

  auto* gb = app.add_subcommand("gb", "Global boundedness witness and prime heuristic");
  gb->add_option("--spec", c.spec, "pFq spec")->required();
  gb->add_option("--terms", c.terms, "Coefficients used for the witness search");
  gb->add_option("--c-max", c.c_max, "Largest scale c tried");
  gb->add_option("--d-max", c.d_max, "Largest multiplier d tried");
  gb->add_option("--heuristic-terms", c.heuristic_terms, "Coefficients scanned by the heuristic");
  gb->add_option("--prime-bound", c.prime_bound, "Primes above this bound count as evidence");

  auto* fac = app.add_subcommand("factorize", "Hadamard factorization report for 3F2([a,b,c],[e,1])");
  fac->add_option("--params", c.params, "a,b,c,e")->required();
  fac->add_option("--terms", c.heuristic_terms, "Coefficients scanned per factor");
  fac->add_option("--prime-bound", c.prime_bound, "Primes above this bound count as evidence");

  auto* dl = app.add_subcommand("dl", "Rational function with the same diagonal, with verification");
  dl->add_option("--expr", c.expr, "Algebraic expression");
  dl->add_option("--vars", c.vars, "Variable order, comma separated");
  dl->add_option("--verify-order", c.verify_order, "Compare diagonals through this order (0 to skip)");
  dl->add_option("--box", c.box, "Reconstruction box, comma separated (empty to skip)");
  dl->add_option("--load", c.load, "Reuse a result written earlier");
  dl->add_option("--fixture", c.fixture, "Check the printed six-variable function for a,b instead");

  auto* ode = app.add_subcommand("ode-check", "Check the order-3 operator on the family series");
  ode->add_option("-a", c.a, "Family parameter a");
  ode->add_option("-b", c.b, "Family parameter b");
  ode->add_option("--order", c.order, "Degree checked");

  auto* recu = app.add_subcommand("recu-check", "Check the family recurrence symbolically and on coefficients");
  recu->add_option("-a", c.a, "Family parameter a");
  recu->add_option("-b", c.b, "Family parameter b");
  recu->add_option("--order", c.order, "Largest n checked");

  auto* zb = app.add_subcommand("zeilberger", "Creative telescoping with certificate verification");
  zb->add_option("--term", c.term, "Summand, e.g. binomial(n,k)^2");
  zb->add_option("-a", c.a, "Family summand parameter a (used without --term)");
  zb->add_option("-b", c.b, "Family summand parameter b (used without --term)");
  zb->add_option("--max-order", c.max_order, "Largest recurrence order tried");
  zb->add_option("--verify-n", c.verify_n, "Check sums for n up to this");

  auto* mp = app.add_subcommand("modp", "Series mod p^r, Mahler and polynomial guessing");
  mp->add_option("--spec", c.spec, "pFq spec")->required();
  mp->add_option("-p,--p", c.p, "Prime")->check(CLI::Range(2ull, 1ull << 31));
  mp->add_option("-r,--r", c.r, "Power of p")->check(CLI::Range(1u, 62u));
  mp->add_option("-N", c.N, "Truncation degree");
  mp->add_option("--precision", c.precision, "p-adic working precision K (default DIAG_PRECISION or 64)");
  mp->add_option("--derive", c.derive, "Replace F by scale*(F - c0)/p, e.g. 1,1/2");
  mp->add_flag("--guess", c.guess, "Guess and verify a Mahler-type equation");
  mp->add_flag("--minpoly", c.minpoly, "Guess and verify a polynomial relation");
  mp->add_option("--verify", c.verify_eq, "Verify Multiplicative(q, A) or Affine(q, A)");
  mp->add_option("--s-max", c.s_max, "Largest s with q = p^s");
  mp->add_option("--deg-max", c.deg_max, "Largest degree of A");
  mp->add_option("--minpoly-degree", c.minpoly_d, "Largest degree in F");
  mp->add_option("--minpoly-xdegree", c.minpoly_D, "Largest degree in x");
  mp->add_option("--format", c.format, "Series output: sparse or binary");
  mp->add_option("--isa", c.isa, "Force the kernel path: scalar or avx2");

  auto* ids = app.add_subcommand("identities", "Run the identity suite as JSON lines");
  ids->add_option("--suite", c.suite, "Suite name");
  ids->add_option("--cases", c.cases, "Run cases from a JSON file instead");
  ids->add_option("--dump-cases", c.dump_cases, "Write the cases as JSON");
  ids->add_flag("!--no-fixture", c.fixture_report, "Skip the six-variable fixture report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*expand) return cmd_expand(c);
    if (*diagc) return cmd_diag(c);
    if (*had) return cmd_hadamard(c);
    if (*hyp) return cmd_hyp(c);
    if (*gb) return cmd_gb(c);
    if (*fac) return cmd_factorize(c);
    if (*dl) {
      if (c.expr.empty() && c.fixture.empty()) throw diag::InputError("dl needs --expr or --fixture");
      return cmd_dl(c);
    }
    if (*ode) return cmd_ode_check(c);
    if (*recu) return cmd_recu_check(c);
    if (*zb) return cmd_zeilberger(c);
    if (*mp) return cmd_modp(c);
    if (*ids) return cmd_identities(c);
  } catch (const diag::InputError& e) {
    std::cerr << "diagtool: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const diag::ResourceError& e) {
    std::cerr << "diagtool: resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::bad_alloc&) {
    std::cerr << "diagtool: out of memory\n";
    return kResourceError;
  } catch (const diag::AlgorithmError& e) {
    std::cerr << "diagtool: computation failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "diagtool: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
