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


#include "diag/errors.hpp"
#include "diag/series.hpp"

namespace diag {

namespace {

struct Expander {
  const std::vector<std::string>& vars;
  const std::vector<std::uint32_t>& bounds;
  Layout layout;

  MultiSeries run(const NodePtr& n) const {
    switch (n->kind) {
      case NodeKind::constant: return constant_series(vars, bounds, n->value, layout);
      case NodeKind::poly: return from_poly(n->poly, bounds, layout);
      case NodeKind::add: {
        MultiSeries s = run(n->children[0]);
        for (std::size_t i = 1; i < n->children.size(); ++i) s = s + run(n->children[i]);
        return s;
      }
      case NodeKind::mul: {
        MultiSeries s = run(n->children[0]);
        for (std::size_t i = 1; i < n->children.size(); ++i) s = s * run(n->children[i]);
        return s;
      }
      case NodeKind::div: return divide(run(n->children[0]), run(n->children[1]));
      case NodeKind::powrat: {
        MultiSeries b = run(n->children[0]);
        if (is_integer(n->exponent)) return pow_integer(b, static_cast<unsigned>(n->exponent.get_num().get_ui()));
        return pow_rational(b, n->exponent);
      }
    }
    throw AlgorithmError("unreachable");
  }
};

}  // namespace

MultiSeries expand(const ValidatedExpr& e, const std::vector<std::uint32_t>& bounds, Layout layout) {
  if (bounds.size() != e.variables().size())
    throw InputError("truncation vector length differs from variable count");
  // Resolve the layout once so every intermediate shares it.
  if (layout == Layout::automatic) layout = MultiSeries(e.variables(), bounds).dense() ? Layout::dense : Layout::sparse;
  Expander ex{e.variables(), bounds, layout};
  return ex.run(e.expr().root());
}

MultiSeries expand(const RationalFunction& r, const std::vector<std::uint32_t>& bounds, Layout layout) {
  if (layout == Layout::automatic) layout = MultiSeries(r.variables(), bounds).dense() ? Layout::dense : Layout::sparse;
  MultiSeries s = from_poly(r.num, bounds, layout);
  for (const auto& f : r.den) {
    if (f.constant_term() == 0)
      throw ValidationError(ValidationError::Kind::denominator_vanishes_at_origin,
                            "denominator factor " + f.to_string() + " vanishes at the origin");
    s = divide(s, from_poly(f, bounds, layout));
  }
  return s;
}

}  // namespace diag
