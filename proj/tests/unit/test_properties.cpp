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


#include <doctest.h>

#include "diag/errors.hpp"
#include "properties.hpp"

using namespace diag;

namespace {

constexpr int kCases = 120;

void require_clean(const prop::Run& r) {
  CHECK(r.cases >= 100);
  CHECK_MESSAGE(r.failures == 0, r.first);
}

}  // namespace

TEST_CASE("series ring laws") { require_clean(prop::ring_laws(101, kCases)); }

TEST_CASE("Hadamard bilinearity, associativity and commutativity") { require_clean(prop::hadamard_laws(102, kCases)); }

TEST_CASE("composition against the brute-force oracle") {
  require_clean(prop::compose_vs_naive(103, kCases));
  std::mt19937_64 rng(1);
  auto f = prop::random_uni(rng, 4), g = prop::random_uni(rng, 4);
  g.c[0] = 1;
  CHECK_THROWS(compose(f, g));
}

TEST_CASE("Frobenius self-test mod p") { require_clean(prop::frobenius(104, kCases)); }

TEST_CASE("variable doubling divides exactly") {
  int points = 0;
  require_clean(prop::doubling(105, kCases, &points));
  CHECK(points >= 100);
}

TEST_CASE("kernel variants agree") { require_clean(prop::kernels_agree(106, kCases)); }

TEST_CASE("a broken law is caught") {
  prop::Run r;
  r.expect(true, "fine");
  r.expect(false, "broken");
  CHECK(r.failures == 1);
  CHECK(r.first.find("broken") == 0);
}
