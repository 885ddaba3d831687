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


#include <immintrin.h>

#include <algorithm>

#include "diag/kernels.hpp"

namespace diag::kernels::avx2 {

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

// Lanes hold values below 2^33, so signed 64-bit compares are safe.
void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m) {
  if (m < 2 || m > (1u << 16)) {
    scalar::axpy_mod(dst, src, n, s, m);
    return;
  }
  // Barrett: q = (t * mu) >> 32 with mu = floor(2^32 / m) is q or q - 1 for t < 2^32.
  const std::uint64_t mu = (std::uint64_t{1} << 32) / m;
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  const __m256i vmu = _mm256_set1_epi64x(static_cast<long long>(mu));
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i vm1 = _mm256_set1_epi64x(static_cast<long long>(m - 1));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_mul_epu32(x, vs);
    __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(t, vmu), 32);
    __m256i r = _mm256_sub_epi64(t, _mm256_mul_epu32(q, vm));
    r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, vm1), vm));
    r = _mm256_add_epi64(r, d);
    r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, vm1), vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  scalar::axpy_mod(dst + i, src + i, n - i, s, m);
}

void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift) {
  std::size_t src_words = (src_bits + 63) / 64;
  std::size_t ws = shift / 64;
  unsigned bs = static_cast<unsigned>(shift % 64);
  if (ws >= dst_words || src_words < 2 || src_bits % 64) {
    scalar::xor_shifted(dst, dst_words, src, src_bits, shift);
    return;
  }
  std::size_t limit = dst_words - ws;
  // Word i of the shifted source: (src[i] << bs) | (src[i-1] >> (64 - bs)).
  // The vector loop covers i in [1, end); the edges go through the scalar rule.
  std::size_t end = std::min(src_words, limit);
  std::uint64_t* out = dst + ws;
  if (bs == 0) {
    std::size_t i = 0;
    for (; i + 4 <= end; i += 4) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(a, b));
    }
    for (; i < end; ++i) out[i] ^= src[i];
    return;
  }
  const __m128i cl = _mm_cvtsi32_si128(static_cast<int>(bs));
  const __m128i cr = _mm_cvtsi32_si128(static_cast<int>(64 - bs));
  out[0] ^= src[0] << bs;
  std::size_t i = 1;
  for (; i + 4 <= end; i += 4) {
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
    __m256i w = _mm256_or_si256(_mm256_sll_epi64(cur, cl), _mm256_srl_epi64(prev, cr));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(a, w));
  }
  for (; i < end; ++i) out[i] ^= (src[i] << bs) | (src[i - 1] >> (64 - bs));
  if (src_words < limit) out[src_words] ^= src[src_words - 1] >> (64 - bs);
}

std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, y)));
    if (mask != 0xF) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xF));
  }
  return i + scalar::first_mismatch(a + i, b + i, n - i);
}

}  // namespace diag::kernels::avx2
