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

#include <vector>

#include "diag/series.hpp"

namespace diag::detail {

struct Entry {
  Exponent e;
  std::uint64_t lin;
  const Rational* c;
};

std::vector<Entry> entries(const MultiSeries& s);
bool same_box(const MultiSeries& a, const MultiSeries& b);
void require_same_box(const MultiSeries& a, const MultiSeries& b);

}  // namespace diag::detail
