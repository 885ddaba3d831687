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
#include <set>

#include "diag/errors.hpp"
#include "series_internal.hpp"

namespace diag {

using VK = ValidationError::Kind;

UniSeries diagonal(const MultiSeries& s) {
  if (s.nvars() == 0) throw InputError("diagonal of a series with no variables");
  std::uint32_t m = *std::min_element(s.bounds().begin(), s.bounds().end());
  UniSeries out("x", std::vector<Rational>(m + 1));
  for (std::uint32_t k = 0; k <= m; ++k) out.c[k] = s.coefficient(Exponent(s.nvars(), k));
  return out;
}

MultiSeries partial_diagonal(const MultiSeries& s, const std::vector<std::pair<std::string, std::string>>& pairs,
                             const std::vector<std::string>& names) {
  const auto& vars = s.variables();
  auto index = [&](const std::string& v) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw ValidationError(VK::unknown_variable, v);
    return static_cast<std::size_t>(it - vars.begin());
  };
  if (!names.empty() && names.size() != pairs.size()) throw InputError("one name per pair required");
  std::vector<int> partner(vars.size(), -1);  // for the first member: index of second
  std::vector<int> pair_of(vars.size(), -1);
  std::set<std::size_t> used;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::size_t a = index(pairs[p].first), b = index(pairs[p].second);
    if (a == b || !used.insert(a).second || !used.insert(b).second)
      throw ValidationError(VK::overlapping_pairs, pairs[p].first + "," + pairs[p].second);
    if (b < a) std::swap(a, b);
    partner[a] = static_cast<int>(b);
    pair_of[a] = static_cast<int>(p);
  }
  std::vector<std::string> out_vars;
  std::vector<std::uint32_t> out_bounds;
  std::vector<std::size_t> kept;  // source index (first member or unpaired)
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (used.count(i) && partner[i] < 0) continue;  // second member
    kept.push_back(i);
    if (partner[i] >= 0) {
      out_vars.push_back(names.empty() ? vars[i] : names[static_cast<std::size_t>(pair_of[i])]);
      out_bounds.push_back(std::min(s.bounds()[i], s.bounds()[static_cast<std::size_t>(partner[i])]));
    } else {
      out_vars.push_back(vars[i]);
      out_bounds.push_back(s.bounds()[i]);
    }
  }
  MultiSeries r(out_vars, out_bounds);
  Exponent f(kept.size());
  for (const auto& en : detail::entries(s)) {
    bool keep = true;
    for (std::size_t k = 0; k < kept.size() && keep; ++k) {
      std::size_t i = kept[k];
      f[k] = en.e[i];
      if (partner[i] >= 0 && en.e[static_cast<std::size_t>(partner[i])] != en.e[i]) keep = false;
      if (f[k] > out_bounds[k]) keep = false;
    }
    if (keep) r.add_to(r.linear(f), *en.c);
  }
  return r;
}

MultiSeries d_operator(const MultiSeries& s, const std::string& y) {
  const auto& vars = s.variables();
  auto it = std::find(vars.begin(), vars.end(), y);
  if (it == vars.end()) throw ValidationError(VK::unknown_variable, y);
  std::size_t yi = static_cast<std::size_t>(it - vars.begin());
  std::vector<std::string> out_vars;
  std::vector<std::uint32_t> out_bounds;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i == yi) continue;
    out_vars.push_back(vars[i]);
    out_bounds.push_back(s.bounds()[i]);
    total += s.bounds()[i];
  }
  if (s.bounds()[yi] < total)
    throw ValidationError(VK::insufficient_truncation,
                          "bound of " + y + " is " + std::to_string(s.bounds()[yi]) + ", needs " +
                              std::to_string(total));
  MultiSeries r(out_vars, out_bounds);
  Exponent f(out_vars.size());
  for (const auto& en : detail::entries(s)) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0, k = 0; i < vars.size(); ++i) {
      if (i == yi) continue;
      f[k++] = en.e[i];
      sum += en.e[i];
    }
    if (sum == en.e[yi]) r.add_to(r.linear(f), *en.c);
  }
  return r;
}

MultiSeries restrict_box(const MultiSeries& s, const std::vector<std::uint32_t>& bounds) {
  MultiSeries r(s.variables(), bounds);
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (bounds[i] > s.bounds()[i]) throw ValidationError(VK::insufficient_truncation, "cannot enlarge a box");
  for (const auto& en : detail::entries(s))
    if (r.in_box(en.e)) r.add_to(r.linear(en.e), *en.c);
  return r;
}

UniSeries to_uni(const MultiSeries& s) {
  if (s.nvars() != 1) throw InputError("univariate series expected");
  UniSeries u(s.variables()[0], std::vector<Rational>(s.bounds()[0] + 1));
  for (const auto& en : detail::entries(s)) u.c[en.e[0]] = *en.c;
  return u;
}

MultiSeries to_multi(const UniSeries& u) {
  MultiSeries s({u.var}, {static_cast<std::uint32_t>(u.order())});
  for (std::size_t i = 0; i < u.c.size(); ++i) s.add_to(i, u.c[i]);
  return s;
}

UniSeries uni_expand(const ValidatedExpr& e, std::uint32_t order) {
  if (e.variables().size() != 1) throw InputError("univariate expression expected");
  return to_uni(expand(e, {order}));
}

UniSeries hadamard(const UniSeries& f, const UniSeries& g) {
  std::size_t n = std::min(f.c.size(), g.c.size());
  UniSeries h(f.var, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) h.c[i] = f.c[i] * g.c[i];
  return h;
}

UniSeries uni_mul(const UniSeries& f, const UniSeries& g) {
  std::size_t n = std::min(f.c.size(), g.c.size());
  UniSeries h(f.var, std::vector<Rational>(n));
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(f.c[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      mpq_mul(t.get_mpq_t(), f.c[i].get_mpq_t(), g.c[j].get_mpq_t());
      h.c[i + j] += t;
    }
  }
  return h;
}

UniSeries uni_add(const UniSeries& f, const UniSeries& g) {
  std::size_t n = std::min(f.c.size(), g.c.size());
  UniSeries h(f.var, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) h.c[i] = f.c[i] + g.c[i];
  return h;
}

UniSeries truncate(const UniSeries& f, std::size_t order) {
  UniSeries h = f;
  if (h.c.size() > order + 1) h.c.resize(order + 1);
  return h;
}

UniSeries compose(const UniSeries& f, const UniSeries& g) {
  if (!g.c.empty() && g.c[0] != 0)
    throw ValidationError(VK::nonzero_constant_term, "inner series of a composition must have zero constant term");
  std::size_t n = std::min(f.c.size(), g.c.size());
  if (n == 0) return UniSeries(f.var, {});
  UniSeries gg = truncate(g, n - 1);
  UniSeries acc(f.var, std::vector<Rational>(n));
  // Horner: acc = f[k] + g * acc, from the top coefficient down.
  for (std::size_t k = n; k-- > 0;) {
    acc = uni_mul(gg, acc);
    acc.c[0] += f.c[k];
  }
  return acc;
}

UniSeries rescale(const UniSeries& f, const Rational& c) {
  UniSeries h = f;
  Rational p = 1;
  for (auto& x : h.c) {
    x *= p;
    p *= c;
  }
  return h;
}

UniSeries derivative(const UniSeries& f) {
  if (f.c.size() <= 1) return UniSeries(f.var, {});
  UniSeries h(f.var, std::vector<Rational>(f.c.size() - 1));
  for (std::size_t i = 1; i < f.c.size(); ++i) h.c[i - 1] = f.c[i] * static_cast<unsigned long>(i);
  return h;
}

std::optional<std::size_t> first_mismatch(const UniSeries& a, const UniSeries& b) {
  std::size_t n = std::min(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.c[i] != b.c[i]) return i;
  return std::nullopt;
}

}  // namespace diag
