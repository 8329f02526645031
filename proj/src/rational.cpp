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

#include "ltc/rational.hpp"

#include <cctype>
#include <string>

#include "ltc/error.hpp"

namespace ltc {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole) {
  if (text.empty()) throw Error(ErrorKind::kParse, "bad rational '" + whole + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::kParse, "bad rational '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::kParse, "bad rational '" + whole + "'");
    }
  }
  BigInt v(text.substr(start));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string int_part = text.substr(0, dot);
    std::string frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part += "0";
    BigInt whole = parse_integer(int_part, text);
    BigInt scale = 1;
    BigInt frac = 0;
    if (!frac_part.empty()) {
      frac = parse_integer(frac_part, text);
      for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    }
    Rational magnitude = Rational(abs(whole)) + Rational(frac, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  return Rational(parse_integer(text, text));
}

std::string to_decimal_string(const Rational& r, int digits) {
  if (r == 0) return "0";
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;

  // Find exponent e with 10^e <= r < 10^(e+1).
  int exponent = 0;
  {
    BigInt n = num, d = den;
    while (n >= d * 10) { d *= 10; ++exponent; }
    while (n < d) { n *= 10; --exponent; }
  }
  // scaled = round(r * 10^(digits-1-exponent)).
  const int shift = digits - 1 - exponent;
  BigInt n = num, d = den;
  for (int i = 0; i < shift; ++i) n *= 10;
  for (int i = 0; i < -shift; ++i) d *= 10;
  BigInt q = n / d;
  BigInt rem = n % d;
  if (rem * 2 >= d) q += 1;
  std::string s = q.str();
  int point = static_cast<int>(s.size()) - shift;  // digits before the point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else if (point >= static_cast<int>(s.size())) {
    out = s + std::string(static_cast<std::size_t>(point) - s.size(), '0');
  } else {
    out = s.substr(0, static_cast<std::size_t>(point)) + "." +
          s.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational pow2(int e) {
  BigInt p = 1;
  p <<= (e < 0 ? -e : e);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt ceil_nonneg(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  return (num + den - 1) / den;
}

}  // namespace ltc
