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


#include <cstdlib>
#include <cstring>

#include "diag/kernels.hpp"

namespace diag::kernels {

namespace {

bool avx2_available() {
#if DIAG_HAVE_AVX2
  return avx2::supported();
#else
  return false;
#endif
}

Isa detect() {
  const char* env = std::getenv("DIAG_FORCE_SCALAR");
  if (env && std::strcmp(env, "0") != 0 && *env) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

Isa& current() {
  static Isa isa = detect();
  return isa;
}

}  // namespace

Isa active_isa() { return current(); }

void set_isa(Isa isa) { current() = (isa == Isa::avx2 && !avx2_available()) ? Isa::scalar : isa; }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::uint64_t s, std::uint64_t m) {
#if DIAG_HAVE_AVX2
  if (current() == Isa::avx2) return avx2::axpy_mod(dst, src, n, s, m);
#endif
  scalar::axpy_mod(dst, src, n, s, m);
}

void xor_shifted(std::uint64_t* dst, std::size_t dst_words, const std::uint64_t* src, std::size_t src_bits,
                 std::size_t shift) {
#if DIAG_HAVE_AVX2
  if (current() == Isa::avx2) return avx2::xor_shifted(dst, dst_words, src, src_bits, shift);
#endif
  scalar::xor_shifted(dst, dst_words, src, src_bits, shift);
}

std::size_t first_mismatch(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
#if DIAG_HAVE_AVX2
  if (current() == Isa::avx2) return avx2::first_mismatch(a, b, n);
#endif
  return scalar::first_mismatch(a, b, n);
}

}  // namespace diag::kernels
