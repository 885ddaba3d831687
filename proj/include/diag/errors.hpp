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
#include <stdexcept>
#include <string>

namespace diag {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: syntax, validation, unsupported shapes. The CLI maps it to exit 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ValidationError : public InputError {
 public:
  enum class Kind {
    denominator_vanishes_at_origin,
    pow_base_constant_term_not_one,
    unknown_variable,
    degenerate_parameters,
    unsupported_shape,
    nonzero_constant_term,
    overlapping_pairs,
    insufficient_truncation,
    lower_parameter_nonpositive_integer,
    non_integral_coefficient,
    bad_argument,
  };
  ValidationError(Kind kind, const std::string& msg);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* kind_name(ValidationError::Kind k);

// Memory or precision budget exceeded. The CLI maps it to exit 3.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. a division that must be exact was not).
class AlgorithmError : public Error {
 public:
  using Error::Error;
};

}  // namespace diag
