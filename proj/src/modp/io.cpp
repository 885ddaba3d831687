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


#include <cstring>
#include <sstream>

#include "diag/errors.hpp"
#include "diag/modp.hpp"

namespace diag {

namespace {

constexpr char kMagic[8] = {'D', 'I', 'A', 'G', 'M', 'O', 'D', 'P'};

void put_le(std::string& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_le(const std::string& in, std::size_t& pos, unsigned bytes) {
  if (pos + bytes > in.size()) throw InputError("truncated mod-p binary dump");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += bytes;
  return v;
}

unsigned width_for(std::uint64_t modulus) {
  std::uint64_t top = modulus - 1;
  if (top < (1u << 8)) return 1;
  if (top < (1u << 16)) return 2;
  if (top < (std::uint64_t{1} << 32)) return 4;
  return 8;
}

}  // namespace

std::string modp_to_binary(const ModPSeries& F) {
  std::string out(kMagic, sizeof kMagic);
  unsigned w = width_for(F.modulus());
  put_le(out, F.p, 8);
  put_le(out, F.r, 4);
  put_le(out, F.degree(), 8);
  put_le(out, w, 1);
  for (auto v : F.c) put_le(out, v, w);
  return out;
}

ModPSeries modp_from_binary(const std::string& bytes) {
  if (bytes.size() < sizeof kMagic || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
    throw InputError("not a mod-p binary dump (bad magic)");
  std::size_t pos = sizeof kMagic;
  ModPSeries F;
  F.p = get_le(bytes, pos, 8);
  F.r = static_cast<unsigned>(get_le(bytes, pos, 4));
  std::uint64_t N = get_le(bytes, pos, 8);
  unsigned w = static_cast<unsigned>(get_le(bytes, pos, 1));
  if (w != width_for(F.modulus())) throw InputError("mod-p binary dump has an inconsistent residue width");
  if ((bytes.size() - pos) != (N + 1) * w) throw InputError("mod-p binary dump has the wrong length");
  std::uint64_t m = F.modulus();
  F.c.reserve(N + 1);
  for (std::uint64_t i = 0; i <= N; ++i) {
    std::uint64_t v = get_le(bytes, pos, w);
    if (v >= m) throw InputError("residue out of range at degree " + std::to_string(i));
    F.c.push_back(v);
  }
  return F;
}

std::string modp_to_sparse_text(const ModPSeries& F) {
  std::ostringstream os;
  os << "# p=" << F.p << " r=" << F.r << " N=" << F.degree() << "\n";
  for (std::size_t i = 0; i < F.c.size(); ++i)
    if (F.c[i]) os << i << ":" << F.c[i] << "\n";
  return os.str();
}

ModPSeries modp_from_sparse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  ModPSeries F;
  bool header = false;
  std::size_t N = 0, lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# p=", 0) != 0) continue;  // free-form comment
      unsigned long long p = 0, N_ = 0;
      unsigned r = 0;
      if (std::sscanf(line.c_str(), "# p=%llu r=%u N=%llu", &p, &r, &N_) != 3)
        throw InputError("malformed sparse header on line " + std::to_string(lineno));
      F.p = p;
      F.r = r;
      N = N_;
      F.c.assign(N + 1, 0);
      header = true;
      continue;
    }
    if (!header) throw InputError("sparse mod-p text needs a '# p= r= N=' header");
    unsigned long long d = 0, v = 0;
    char extra = 0;
    if (std::sscanf(line.c_str(), "%llu:%llu%c", &d, &v, &extra) != 2)
      throw InputError("malformed 'degree:residue' on line " + std::to_string(lineno));
    if (d > N || v >= F.modulus()) throw InputError("entry out of range on line " + std::to_string(lineno));
    F.c[d] = v;
  }
  if (!header) throw InputError("empty sparse mod-p text");
  return F;
}

}  // namespace diag
