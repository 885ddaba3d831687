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

namespace diag {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : InputError(msg + " at byte " + std::to_string(offset)), offset_(offset) {}

ValidationError::ValidationError(Kind kind, const std::string& msg)
    : InputError(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}

const char* kind_name(ValidationError::Kind k) {
  using K = ValidationError::Kind;
  switch (k) {
    case K::denominator_vanishes_at_origin: return "DenominatorVanishesAtOrigin";
    case K::pow_base_constant_term_not_one: return "PowBaseConstantTermNotOne";
    case K::unknown_variable: return "UnknownVariable";
    case K::degenerate_parameters: return "DegenerateParameters";
    case K::unsupported_shape: return "UnsupportedShape";
    case K::nonzero_constant_term: return "NonzeroConstantTerm";
    case K::overlapping_pairs: return "OverlappingPairs";
    case K::insufficient_truncation: return "InsufficientTruncation";
    case K::lower_parameter_nonpositive_integer: return "LowerParameterNonPositiveInteger";
    case K::non_integral_coefficient: return "NonIntegralCoefficient";
    case K::bad_argument: return "BadArgument";
  }
  return "ValidationError";
}

}  // namespace diag
