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

#include <cstddef>
#include <cstdint>

namespace diag::kernels {

enum class Isa { scalar, avx2 };

// Chosen once from CPU features; DIAG_FORCE_SCALAR=1 in the environment pins
// the scalar path.
Isa active_isa();
// Test hook: overrides the dispatch decision (avx2 is ignored when unsupported).
void set_isa(Isa isa);
const char* isa_name(Isa isa);

// dst[i] = (dst[i] + s * src[i]) mod m for i < n. Inputs lie in [0, m), 1 <= m < 2^63.
void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m);

// Bit arrays packed little-endian in 64-bit words. XORs src (src_bits bits)
// shifted left by `shift` bits into dst (dst_words words); bits past the end
// of dst are dropped.
void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift);

// Index of the first differing word, or n when equal.
std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

namespace scalar {
void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m);
void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift);
std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool supported();
// Falls back to scalar for m > 2^16, where lane products no longer fit 32 bits.
void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m);
void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift);
std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace avx2

}  // namespace diag::kernels
