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


#include "diag/kernels.hpp"

namespace diag::kernels::scalar {

void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m) {
  using u128 = unsigned __int128;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(static_cast<u128>(s) * src[i] % m);
    std::uint64_t r = dst[i] + t;
    if (r >= m) r -= m;
    dst[i] = r;
  }
}

void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift) {
  std::size_t src_words = (src_bits + 63) / 64;
  std::size_t ws = shift / 64;
  unsigned bs = static_cast<unsigned>(shift % 64);
  if (ws >= dst_words) return;
  // Mask off bits past src_bits in the last source word.
  auto word = [&](std::size_t i) -> std::uint64_t {
    if (i >= src_words) return 0;
    std::uint64_t w = src[i];
    if (i + 1 == src_words && src_bits % 64) w &= (std::uint64_t{1} << (src_bits % 64)) - 1;
    return w;
  };
  std::size_t limit = dst_words - ws;
  if (bs == 0) {
    for (std::size_t i = 0; i < src_words && i < limit; ++i) dst[ws + i] ^= word(i);
    return;
  }
  for (std::size_t i = 0; i <= src_words && i < limit; ++i) {
    std::uint64_t lo = word(i) << bs;
    std::uint64_t hi = i > 0 ? word(i - 1) >> (64 - bs) : 0;
    dst[ws + i] ^= lo | hi;
  }
}

std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

}  // namespace diag::kernels::scalar
