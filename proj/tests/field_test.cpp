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


#include <gtest/gtest.h>

#include <sstream>

#include "ltc/error.hpp"
#include "ltc/field.hpp"

namespace {

using ltc::ErrorKind;
using ltc::Field;
using ltc::FieldElement;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ltc::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ltc::Error thrown";
  return ErrorKind::kParse;
}

TEST(Field, RejectsNonPrimesAndLargeOrders) {
  for (std::uint32_t q : {0u, 1u, 4u, 6u, 9u, 15u, 65535u}) {
    EXPECT_EQ(kind_of([&] { Field f(q); }), ErrorKind::kNotPrime) << q;
  }
  EXPECT_EQ(kind_of([] { Field f((1u << 16) + 1); }), ErrorKind::kTooLarge);
  EXPECT_EQ(kind_of([] { Field f(65537 * 3); }), ErrorKind::kTooLarge);
  EXPECT_NO_THROW(Field(65521));
  EXPECT_NO_THROW(Field(2));
}

TEST(Field, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t v = 0; v < 2000; ++v) {
    bool prime = v >= 2;
    for (std::uint64_t d = 2; d * d <= v; ++d) prime = prime && v % d != 0;
    EXPECT_EQ(ltc::is_prime(v), prime) << v;
  }
}

TEST(Field, OperationsMatchIntegerArithmetic) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 65521u}) {
    const Field f(q);
    const std::uint32_t step = q > 100 ? 977 : 1;
    for (std::uint64_t a = 0; a < q; a += step) {
      for (std::uint64_t b = 0; b < q; b += step) {
        EXPECT_EQ(f.add(a, b), (a + b) % q);
        EXPECT_EQ(f.sub(a, b), (a + q - b) % q);
        EXPECT_EQ(f.mul(a, b), a * b % q);
      }
    }
  }
}

TEST(Field, InverseAndPower) {
  const Field f(13);
  for (std::uint32_t a = 1; a < 13; ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    std::uint64_t p = 1;
    for (std::uint64_t e = 0; e < 30; ++e) {
      EXPECT_EQ(f.pow(a, e), p);
      p = p * a % 13;
    }
  }
  EXPECT_EQ(kind_of([&] { f.inv(0); }), ErrorKind::kDivideByZero);
  EXPECT_EQ(kind_of([&] { f.div(3, 0); }), ErrorKind::kDivideByZero);
}

TEST(Field, ElementsCarryTheirField) {
  const Field f5(5), f7(7);
  const FieldElement a(f5, 3), b(f5, 4);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a - b).value(), 4u);
  EXPECT_EQ((a * b).value(), 2u);
  EXPECT_EQ((a / b).value(), 2u);  // 4^{-1} = 4, 3*4 = 12 = 2
  EXPECT_EQ((-a).value(), 2u);
  EXPECT_EQ(FieldElement(f5, 12).value(), 2u);
  EXPECT_EQ(kind_of([&] { (void)(a + FieldElement(f7, 1)); }), ErrorKind::kFieldMismatch);
  std::ostringstream os;
  os << a;
  EXPECT_FALSE(os.str().empty());
}

TEST(Field, CheckSymbolsRejectsOutOfRange) {
  const Field f(3);
  const std::vector<ltc::Symbol> ok{0, 1, 2}, bad{0, 3};
  EXPECT_NO_THROW(f.check_symbols(ok, "word"));
  EXPECT_THROW(f.check_symbols(bad, "word"), ltc::Error);
}

}  // namespace
