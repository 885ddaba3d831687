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

#include <random>
#include <vector>

#include "diag/kernels.hpp"

using namespace diag::kernels;
using Words = std::vector<std::uint64_t>;

namespace {

bool bit(const Words& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1; }

// Bit-by-bit reference for dst ^= (src truncated to src_bits) << shift.
Words xor_naive(Words dst, const Words& src, std::size_t src_bits, std::size_t shift) {
  for (std::size_t i = 0; i < src_bits; ++i) {
    std::size_t j = i + shift;
    if (j >= dst.size() * 64) break;
    if (bit(src, i)) dst[j / 64] ^= std::uint64_t{1} << (j % 64);
  }
  return dst;
}

Words random_words(std::mt19937_64& rng, std::size_t n) {
  Words w(n);
  for (auto& x : w) x = rng();
  return w;
}

}  // namespace

TEST_CASE("axpy_mod agrees with the 128-bit reference") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t m = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 729 : 1 + rng() % (std::uint64_t{1} << 62));
    std::size_t n = rng() % 70;
    Words dst(n), src(n);
    for (auto& x : dst) x = rng() % m;
    for (auto& x : src) x = rng() % m;
    std::uint64_t s = rng() % m;
    Words ref = dst;
    for (std::size_t i = 0; i < n; ++i)
      ref[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(s) * src[i] + dst[i]) % m);
    Words a = dst, b = dst;
    scalar::axpy_mod(a.data(), src.data(), n, s, m);
    CHECK(a == ref);
    if (avx2::supported()) {
      avx2::axpy_mod(b.data(), src.data(), n, s, m);
      CHECK(b == ref);
    }
  }
}

TEST_CASE("xor_shifted agrees with the bitwise reference") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t dw = 1 + rng() % 20, sbits = rng() % 1000, shift = rng() % 1400;
    Words dst = random_words(rng, dw), src = random_words(rng, (sbits + 63) / 64 + 1);
    Words ref = xor_naive(dst, src, sbits, shift);
    Words a = dst, b = dst;
    scalar::xor_shifted(a.data(), dw, src.data(), sbits, shift);
    CHECK(a == ref);
    if (avx2::supported()) {
      avx2::xor_shifted(b.data(), dw, src.data(), sbits, shift);
      CHECK(b == ref);
    }
  }
}

TEST_CASE("first_mismatch") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng() % 100;
    Words a = random_words(rng, n), b = a;
    std::size_t expect = n;
    if (n && trial % 4) {
      expect = rng() % n;
      b[expect] ^= std::uint64_t{1} << (rng() % 64);
      for (std::size_t j = expect + 1; j < n; ++j)
        if (rng() % 2) b[j] ^= 1;
    }
    CHECK(scalar::first_mismatch(a.data(), b.data(), n) == expect);
    if (avx2::supported()) CHECK(avx2::first_mismatch(a.data(), b.data(), n) == expect);
  }
}

TEST_CASE("dispatch") {
  auto saved = active_isa();
  set_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
  Words a{1, 2, 3}, b{1, 2, 4};
  CHECK(first_mismatch(a.data(), b.data(), 3) == 2);
  set_isa(saved);
}
