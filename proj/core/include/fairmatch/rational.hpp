// Copyright 2026 The fairmatch Authors
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

#ifndef FAIRMATCH_RATIONAL_HPP_
#define FAIRMATCH_RATIONAL_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairmatch {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatMatrix = std::vector<std::vector<Rat>>;

/// Parses "a/b" fractions, integers, and decimal strings (optionally with a
/// base-10 exponent, e.g. "1e-6") into an exact rational.
Rat parse_rational(const std::string& text);

/// Canonical "a/b" rendering, e.g. "9/10", "3/1", "-1/2".
std::string rational_to_fraction(const Rat& value);

/// Decimal rendering to `digits` significant digits (round half away from
/// zero). Used only for human-facing CSV output, never for exact formats.
std::string rational_to_decimal(const Rat& value, int digits = 12);

inline Int ceil_div(const Int& a, const Int& b) {
  // b > 0 expected.
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

class unsupported_distribution : public std::runtime_error {
 public:
  explicit unsupported_distribution(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace fairmatch

#endif  // FAIRMATCH_RATIONAL_HPP_
