// Copyright 2026 The ltc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms; integers print as "p/1" so the format is uniform.
std::string to_fraction_string(const Rational& r);

/// Parses "p/q", "p" or a finite decimal such as "0.125"; throws Parse.
Rational parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits (round half away from
/// zero), used for the human-readable copies in reports.
std::string to_decimal_string(const Rational& r, int digits = 20);

double to_double(const Rational& r);

/// 2^e for any integer e.
Rational pow2(int e);

/// ceil(r) for r >= 0.
BigInt ceil_nonneg(const Rational& r);

}  // namespace ltc
