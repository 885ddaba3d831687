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
#include <sstream>

#include "diag/errors.hpp"
#include "diag/kernels.hpp"
#include "diag/modp.hpp"

namespace diag {

namespace {

using VK = ValidationError::Kind;
using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

Bits to_bits(const ModPSeries& F, std::size_t N) {
  Bits b(words_for(N + 1), 0);
  for (std::size_t i = 0; i <= N && i < F.c.size(); ++i)
    if (F.c[i] & 1) b[i / 64] |= std::uint64_t{1} << (i % 64);
  return b;
}

void mask_tail(Bits& b, std::size_t N) {
  std::size_t used = (N + 1) % 64;
  if (used) b.back() &= (std::uint64_t{1} << used) - 1;
}

bool bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

// a * b through degree N over GF(2); the factor with fewer set bits drives the shifts.
Bits bits_mul(const Bits& a, const Bits& b, std::size_t N) {
  auto pop = [](const Bits& x) {
    std::size_t c = 0;
    for (auto w : x) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  };
  const Bits* outer = &a;
  const Bits* inner = &b;
  if (pop(b) < pop(a)) std::swap(outer, inner);
  Bits out(words_for(N + 1), 0);
  std::size_t inner_bits = std::min(inner->size() * 64, N + 1);
  for (std::size_t w = 0; w < outer->size(); ++w) {
    std::uint64_t word = (*outer)[w];
    while (word) {
      std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      if (j > N) break;
      kernels::xor_shifted(out.data(), out.size(), inner->data(), words_for(inner_bits) * 64, j);
    }
  }
  mask_tail(out, N);
  return out;
}

std::optional<std::size_t> first_bit_mismatch(const Bits& a, const Bits& b) {
  std::size_t w = kernels::first_mismatch(a.data(), b.data(), a.size());
  if (w == a.size()) return std::nullopt;
  return w * 64 + static_cast<std::size_t>(__builtin_ctzll(a[w] ^ b[w]));
}

std::optional<std::size_t> first_word_mismatch(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = kernels::first_mismatch(a.data(), b.data(), n);
  if (i == n) return std::nullopt;
  return i;
}

VerifyResult result_of(std::optional<std::size_t> mismatch) {
  VerifyResult r;
  r.ok = !mismatch;
  r.first_failure = mismatch;
  return r;
}

void check_degree(const ModPSeries& F, std::size_t N) {
  if (N > F.degree())
    throw ValidationError(VK::insufficient_truncation,
                          "verification degree " + std::to_string(N) + " exceeds series degree " +
                              std::to_string(F.degree()));
}

ModPSeries zero_series(const ModPSeries& F, std::size_t N) {
  ModPSeries z;
  z.p = F.p;
  z.r = F.r;
  z.c.assign(N + 1, 0);
  return z;
}

// Dense reference path over Z/p^r.
VerifyResult verify_dense(const ModPSeries& F, const FunctionalEq& eq, std::size_t N) {
  std::uint64_t m = F.modulus();
  ModPSeries lhs = truncate(F, N);
  ModPSeries acc = zero_series(F, N);
  if (eq.kind == FunctionalEq::Kind::minpoly) {
    ModPSeries power = zero_series(F, N);
    power.c[0] = 1 % m;
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
      if (i > 0) power = mul_trunc(power, lhs, N);
      const ModPoly& ci = eq.coeffs[i];
      for (std::size_t j = 0; j < ci.size() && j <= N; ++j)
        if (ci[j] % m) kernels::axpy_mod(acc.c.data() + j, power.c.data(), N + 1 - j, ci[j] % m, m);
    }
    return result_of(first_word_mismatch(acc.c, zero_series(F, N).c));
  }
  ModPSeries G = frobenius_substitute(F, eq.q(), N);
  if (eq.kind == FunctionalEq::Kind::multiplicative) {
    for (std::size_t j = 0; j < eq.A.size() && j <= N; ++j)
      if (eq.A[j] % m) kernels::axpy_mod(acc.c.data() + j, G.c.data(), N + 1 - j, eq.A[j] % m, m);
  } else {
    acc = G;
    for (std::size_t j = 0; j < eq.A.size() && j <= N; ++j) acc.c[j] = (acc.c[j] + eq.A[j] % m) % m;
  }
  return result_of(first_word_mismatch(acc.c, lhs.c));
}

VerifyResult verify_bits(const ModPSeries& F, const FunctionalEq& eq, std::size_t N) {
  Bits f = to_bits(F, N);
  Bits acc(f.size(), 0);
  if (eq.kind == FunctionalEq::Kind::minpoly) {
    Bits power(f.size(), 0);
    power[0] = 1;
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
      if (i > 0) power = bits_mul(power, f, N);
      const ModPoly& ci = eq.coeffs[i];
      for (std::size_t j = 0; j < ci.size() && j <= N; ++j)
        if (ci[j] & 1) kernels::xor_shifted(acc.data(), acc.size(), power.data(), power.size() * 64, j);
    }
    mask_tail(acc, N);
    return result_of(first_bit_mismatch(acc, Bits(f.size(), 0)));
  }
  Bits g(f.size(), 0);
  std::uint64_t q = eq.q();
  for (std::size_t i = 0; i <= N && i * q <= N; ++i)
    if (bit(f, i)) g[(i * q) / 64] |= std::uint64_t{1} << ((i * q) % 64);
  if (eq.kind == FunctionalEq::Kind::multiplicative) {
    for (std::size_t j = 0; j < eq.A.size() && j <= N; ++j)
      if (eq.A[j] & 1) kernels::xor_shifted(acc.data(), acc.size(), g.data(), g.size() * 64, j);
  } else {
    acc = g;
    for (std::size_t j = 0; j < eq.A.size() && j <= N; ++j)
      if (eq.A[j] & 1) acc[j / 64] ^= std::uint64_t{1} << (j % 64);
  }
  mask_tail(acc, N);
  return result_of(first_bit_mismatch(acc, f));
}

std::uint64_t ipow(std::uint64_t p, unsigned s) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) return 0;  // overflow marker
    q *= p;
  }
  return q;
}

}  // namespace

std::uint64_t FunctionalEq::q() const { return ipow(p, s); }

std::string FunctionalEq::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::multiplicative:
      os << "Multiplicative(" << q() << ", " << modpoly_to_string(A) << ")";
      break;
    case Kind::affine:
      os << "Affine(" << q() << ", " << modpoly_to_string(A) << ")";
      break;
    case Kind::minpoly: {
      os << "MinPoly(";
      bool first = true;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        bool nz = std::any_of(coeffs[i].begin(), coeffs[i].end(), [](std::uint64_t v) { return v != 0; });
        if (!nz) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << modpoly_to_string(coeffs[i]) << ")";
        if (i > 0) os << "*F";
        if (i > 1) os << "^" << i;
      }
      if (first) os << "0";
      os << ")";
      break;
    }
  }
  return os.str();
}

VerifyResult verify_relation_reference(const ModPSeries& F, const FunctionalEq& eq, std::size_t N) {
  check_degree(F, N);
  if (eq.p != F.p) throw ValidationError(VK::bad_argument, "relation and series use different primes");
  if (eq.kind != FunctionalEq::Kind::minpoly && eq.q() == 0) throw ResourceError("p^s overflows");
  return verify_dense(F, eq, N);
}

VerifyResult verify_relation(const ModPSeries& F, const FunctionalEq& eq, std::size_t N) {
  check_degree(F, N);
  if (eq.p != F.p) throw ValidationError(VK::bad_argument, "relation and series use different primes");
  if (eq.kind != FunctionalEq::Kind::minpoly && eq.q() == 0) throw ResourceError("p^s overflows");
  if (F.p == 2 && F.r == 1) return verify_bits(F, eq, N);
  return verify_dense(F, eq, N);
}

std::optional<FunctionalEq> guess_mahler(const ModPSeries& F, unsigned sMax, std::size_t degAMax) {
  const std::size_t N = F.degree();
  const std::size_t W = N / 2;
  const std::uint64_t m = F.modulus();
  if (std::all_of(F.c.begin(), F.c.begin() + static_cast<long>(W + 1), [](std::uint64_t v) { return v == 0; }))
    return std::nullopt;
  const bool multiplicative = F.c[0] != 0;
  PadicContext ctx{F.p, F.r, m};
  if (multiplicative && F.c[0] % F.p == 0) return std::nullopt;  // no unit constant term
  for (unsigned s = 1; s <= sMax; ++s) {
    std::uint64_t q = ipow(F.p, s);
    if (q == 0 || q > W) break;
    FunctionalEq eq;
    eq.p = F.p;
    eq.s = s;
    ModPSeries window = truncate(F, W);
    ModPSeries G = frobenius_substitute(window, q, W);
    if (multiplicative) {
      eq.kind = FunctionalEq::Kind::multiplicative;
      std::uint64_t inv = inverse_mod(ctx, G.c[0]);
      std::size_t top = std::min(degAMax, W);
      eq.A.assign(top + 1, 0);
      for (std::size_t k = 0; k <= top; ++k) {
        std::uint64_t v = window.c[k];
        for (std::size_t t = q; t <= k; t += q) v = (v + m - mulmod(eq.A[k - t], G.c[t], m)) % m;
        eq.A[k] = mulmod(v, inv, m);
      }
    } else {
      eq.kind = FunctionalEq::Kind::affine;
      eq.A.assign(W + 1, 0);
      for (std::size_t k = 0; k <= W; ++k) eq.A[k] = (window.c[k] + m - G.c[k]) % m;
      std::size_t last = W + 1;
      while (last > 0 && eq.A[last - 1] == 0) --last;
      if (last > degAMax + 1) continue;
      eq.A.resize(std::max<std::size_t>(last, 1));
    }
    while (eq.A.size() > 1 && eq.A.back() == 0) eq.A.pop_back();
    if (!verify_relation(window, eq, W).ok) continue;
    if (verify_relation(F, eq, N).ok) return eq;
  }
  return std::nullopt;
}

namespace {

// Row-echelon basis with rows reduced on insertion; pivot = first nonzero column.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t ncols) : ncols_(ncols), words_(words_for(ncols)), pivot_(ncols, -1) {}
  std::size_t rank() const { return rows_.size(); }
  void insert(Bits row) {
    for (std::size_t w = 0; w < words_; ++w) {
      while (row[w]) {
        std::size_t col = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
        int pr = pivot_[col];
        if (pr < 0) {
          pivot_[col] = static_cast<int>(rows_.size());
          rows_.push_back(std::move(row));
          return;
        }
        const Bits& r = rows_[static_cast<std::size_t>(pr)];
        for (std::size_t k = w; k < words_; ++k) row[k] ^= r[k];
      }
    }
  }
  // Nullspace vector with a 1 at the first non-pivot column and zeros at later columns.
  std::optional<std::vector<std::uint64_t>> first_relation() const {
    std::size_t free = ncols_;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_[c] < 0) {
        free = c;
        break;
      }
    if (free == ncols_) return std::nullopt;
    std::vector<std::uint64_t> x(ncols_, 0);
    x[free] = 1;
    for (std::size_t c = free; c-- > 0;) {
      const Bits& r = rows_[static_cast<std::size_t>(pivot_[c])];
      std::uint64_t v = 0;
      for (std::size_t k = c + 1; k <= free; ++k)
        if ((r[k / 64] >> (k % 64)) & 1) v ^= x[k];
      x[c] = v;
    }
    return x;
  }

 private:
  std::size_t ncols_, words_;
  std::vector<int> pivot_;
  std::vector<Bits> rows_;
};

class GfpEchelon {
 public:
  GfpEchelon(std::size_t ncols, std::uint64_t p) : ncols_(ncols), p_(p), pivot_(ncols, -1) {}
  std::size_t rank() const { return rows_.size(); }
  void insert(std::vector<std::uint64_t> row) {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (row[c] == 0) continue;
      int pr = pivot_[c];
      if (pr < 0) {
        std::uint64_t inv = powmod(row[c], p_ - 2, p_);
        for (std::size_t k = c; k < ncols_; ++k) row[k] = mulmod(row[k], inv, p_);
        pivot_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      const auto& r = rows_[static_cast<std::size_t>(pr)];
      std::uint64_t f = row[c];
      for (std::size_t k = c; k < ncols_; ++k) row[k] = (row[k] + p_ - mulmod(f, r[k], p_)) % p_;
    }
  }
  std::optional<std::vector<std::uint64_t>> first_relation() const {
    std::size_t free = ncols_;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_[c] < 0) {
        free = c;
        break;
      }
    if (free == ncols_) return std::nullopt;
    std::vector<std::uint64_t> x(ncols_, 0);
    x[free] = 1;
    for (std::size_t c = free; c-- > 0;) {
      const auto& r = rows_[static_cast<std::size_t>(pivot_[c])];
      std::uint64_t v = 0;
      for (std::size_t k = c + 1; k <= free; ++k) v = (v + mulmod(r[k], x[k], p_)) % p_;
      x[c] = (p_ - v) % p_;
    }
    return x;
  }

 private:
  std::size_t ncols_;
  std::uint64_t p_;
  std::vector<int> pivot_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::optional<FunctionalEq> guess_minpoly_mod(const ModPSeries& F, std::size_t dMax, std::size_t DMax) {
  if (F.r != 1) throw ValidationError(VK::bad_argument, "minimal polynomial guessing needs r = 1");
  const std::size_t N = F.degree();
  const std::size_t W = N / 2;
  const std::size_t stride = DMax + 1;
  const std::size_t ncols = (dMax + 1) * stride;
  std::optional<std::vector<std::uint64_t>> rel;
  if (F.p == 2) {
    Bits f = to_bits(F, W);
    std::vector<Bits> powers;
    Bits one(f.size(), 0);
    one[0] = 1;
    powers.push_back(one);
    for (std::size_t i = 1; i <= dMax; ++i) powers.push_back(bits_mul(powers.back(), f, W));
    Gf2Echelon ech(ncols);
    for (std::size_t m = 0; m <= W && ech.rank() < ncols; ++m) {
      Bits row(words_for(ncols), 0);
      bool any = false;
      for (std::size_t i = 0; i <= dMax; ++i)
        for (std::size_t j = 0; j <= DMax && j <= m; ++j)
          if (bit(powers[i], m - j)) {
            std::size_t col = i * stride + j;
            row[col / 64] |= std::uint64_t{1} << (col % 64);
            any = true;
          }
      if (any) ech.insert(std::move(row));
    }
    rel = ech.first_relation();
  } else {
    ModPSeries window = truncate(F, W);
    std::vector<ModPSeries> powers;
    ModPSeries one = zero_series(F, W);
    one.c[0] = 1;
    powers.push_back(one);
    for (std::size_t i = 1; i <= dMax; ++i) powers.push_back(mul_trunc(powers.back(), window, W));
    GfpEchelon ech(ncols, F.p);
    for (std::size_t m = 0; m <= W && ech.rank() < ncols; ++m) {
      std::vector<std::uint64_t> row(ncols, 0);
      bool any = false;
      for (std::size_t i = 0; i <= dMax; ++i)
        for (std::size_t j = 0; j <= DMax && j <= m; ++j) {
          std::uint64_t v = powers[i].c[m - j];
          if (v) {
            row[i * stride + j] = v;
            any = true;
          }
        }
      if (any) ech.insert(std::move(row));
    }
    rel = ech.first_relation();
  }
  if (!rel) return std::nullopt;
  FunctionalEq eq;
  eq.kind = FunctionalEq::Kind::minpoly;
  eq.p = F.p;
  for (std::size_t i = 0; i <= dMax; ++i) {
    ModPoly c((*rel).begin() + static_cast<long>(i * stride), (*rel).begin() + static_cast<long>((i + 1) * stride));
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    eq.coeffs.push_back(std::move(c));
  }
  while (eq.coeffs.size() > 1 && eq.coeffs.back().size() == 1 && eq.coeffs.back()[0] == 0) eq.coeffs.pop_back();
  if (!verify_relation(F, eq, N).ok) return std::nullopt;
  return eq;
}

bool frobenius_self_test(const ModPSeries& F) {
  if (F.r != 1) throw ValidationError(VK::bad_argument, "Frobenius self-test needs r = 1");
  const std::size_t N = F.degree();
  ModPSeries sub = frobenius_substitute(F, F.p, N);
  if (F.p == 2) return bits_mul(to_bits(F, N), to_bits(F, N), N) == to_bits(sub, N);
  return pow_trunc(F, F.p, N).c == sub.c;
}

}  // namespace diag
