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


#include <json.hpp>

#include "diag/errors.hpp"
#include "series_internal.hpp"

namespace diag {

std::string to_json(const MultiSeries& s) {
  nlohmann::ordered_json j;
  j["vars"] = s.variables();
  j["trunc"] = s.bounds();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& en : detail::entries(s)) {
    nlohmann::ordered_json c;
    c["e"] = en.e;
    c["n"] = en.c->get_num().get_str();
    c["d"] = en.c->get_den().get_str();
    coeffs.push_back(std::move(c));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

MultiSeries multiseries_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    auto vars = j.at("vars").get<std::vector<std::string>>();
    auto trunc = j.at("trunc").get<std::vector<std::uint32_t>>();
    MultiSeries s(vars, trunc);
    for (const auto& c : j.at("coeffs")) {
      auto e = c.at("e").get<Exponent>();
      Rational q = make_rational(Integer(c.at("n").get<std::string>()), Integer(c.at("d").get<std::string>()));
      if (!s.in_box(e)) throw InputError("coefficient exponent outside the truncation box");
      s.set(e, q);
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed series JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw InputError(std::string("malformed series JSON number: ") + ex.what());
  }
}

std::string to_text(const UniSeries& u) {
  std::string out;
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(u.c[i]);
  }
  return out;
}

}  // namespace diag
