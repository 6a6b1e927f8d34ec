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

#include "fairmatch/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fairmatch {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Int pow10(long e) {
  Int p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

// "123", "1.25", "1e-6", "2.5e3" -> exact rational.
Rat parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  s = s.substr(pos);

  long exponent = 0;
  const std::size_t epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    const std::string etext = s.substr(epos + 1);
    if (etext.empty() ||
        !all_digits(etext[0] == '+' || etext[0] == '-' ? etext.substr(1) : etext)) {
      throw validation_error("invalid exponent in numeric literal '" + text + "'");
    }
    exponent = std::stol(etext);
    s = s.substr(0, epos);
  }

  std::string int_part = s, frac_part;
  const std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty()) int_part = "0";
  if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw validation_error("invalid numeric literal '" + text + "'");
  }

  // A leading zero would make cpp_int read the digits as octal.
  std::string digits_text = int_part + frac_part;
  const std::size_t nonzero = digits_text.find_first_not_of('0');
  digits_text = nonzero == std::string::npos ? "0" : digits_text.substr(nonzero);
  Int numerator(digits_text);
  Int denominator = pow10(static_cast<long>(frac_part.size()));
  if (exponent > 0) {
    numerator *= pow10(exponent);
  } else if (exponent < 0) {
    denominator *= pow10(-exponent);
  }
  Rat result(numerator, denominator);
  return negative ? -result : result;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw validation_error("empty numeric literal");
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    const Rat num = parse_decimal(text.substr(0, slash));
    const Rat den = parse_decimal(text.substr(slash + 1));
    if (denominator(num) != 1 || denominator(den) != 1) {
      throw validation_error("fraction parts must be integers in '" + text + "'");
    }
    if (den == 0) throw validation_error("zero denominator in '" + text + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string rational_to_fraction(const Rat& value) {
  std::ostringstream out;
  out << numerator(value) << "/" << denominator(value);
  return out.str();
}

std::string rational_to_decimal(const Rat& value, int digits) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  Rat v = negative ? Rat(-value) : value;

  // e0 such that v is in [10^(e0-1), 10^e0).
  int e0 = 0;
  {
    Rat t = v;
    if (t >= 1) {
      while (t >= 1) {
        t /= 10;
        ++e0;
      }
    } else {
      while (t < Rat(1, 10)) {
        t *= 10;
        --e0;
      }
    }
  }

  // Scale into [10^(digits-1), 10^digits) and round half up.
  const int shift = digits - e0;
  const Rat scaled =
      shift >= 0 ? v * Rat(pow10(shift)) : v / Rat(pow10(-shift));
  const Rat half_up = scaled + Rat(1, 2);
  Int mantissa = numerator(half_up) / denominator(half_up);
  std::ostringstream ms;
  ms << mantissa;
  std::string m = ms.str();
  if (static_cast<int>(m.size()) > digits) {  // rounding carried over
    m.pop_back();
    ++e0;
  }
  // Strip trailing zeros of the fractional expansion.
  std::string out;
  if (e0 <= 0) {
    out = "0." + std::string(-e0, '0') + m;
  } else if (e0 >= static_cast<int>(m.size())) {
    out = m + std::string(e0 - m.size(), '0');
  } else {
    out = m.substr(0, e0) + "." + m.substr(e0);
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace fairmatch
