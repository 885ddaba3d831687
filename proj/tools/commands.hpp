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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace diagtool {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceError = 3;

struct RunConfig {
  std::string command_line;
  std::string output;  // empty: stdout
  unsigned threads = 1;
  bool quiet = false;

  std::string expr;
  std::string spec;
  std::string left, right;
  std::string vars;
  std::size_t order = 10;
  std::string scale = "1";
  bool json = false;

  // gb
  std::size_t terms = 40;
  std::string c_max = "100000", d_max = "1000";
  std::size_t heuristic_terms = 60;
  unsigned long prime_bound = 10;

  // factorize: a,b,c,e of 3F2([a,b,c],[e,1])
  std::string params;

  // dl
  std::size_t verify_order = 5;
  std::string box = "3,3,3";
  std::string fixture;  // "a,b"
  std::string load;     // previously written DLResult JSON

  // family grid commands
  long a = 1, b = 3;

  // zeilberger
  std::string term;
  std::size_t max_order = 4;
  long verify_n = 15;

  // modp
  std::uint64_t p = 2;
  unsigned r = 1;
  std::size_t N = 1000;
  unsigned precision = 0;
  bool guess = false;
  bool minpoly = false;
  std::string verify_eq;
  std::string derive;  // "c0,scale"
  unsigned s_max = 10;
  std::size_t deg_max = 16;
  std::size_t minpoly_d = 64, minpoly_D = 2;
  std::string format = "sparse";
  std::string isa;

  // identities
  std::string suite = "builtin";
  std::string cases;
  std::string dump_cases;
  bool fixture_report = true;
};

int cmd_expand(const RunConfig& c);
int cmd_diag(const RunConfig& c);
int cmd_hadamard(const RunConfig& c);
int cmd_hyp(const RunConfig& c);
int cmd_gb(const RunConfig& c);
int cmd_factorize(const RunConfig& c);
int cmd_dl(const RunConfig& c);
int cmd_ode_check(const RunConfig& c);
int cmd_recu_check(const RunConfig& c);
int cmd_zeilberger(const RunConfig& c);
int cmd_modp(const RunConfig& c);
int cmd_identities(const RunConfig& c);

}  // namespace diagtool
