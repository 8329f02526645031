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
#include <iosfwd>
#include <span>
#include <vector>

#include "ltc/error.hpp"

namespace ltc {

/// Raw residue in [0, q). Bulk data (words, matrices) is stored as Symbols;
/// FieldElement is the checked scalar type.
using Symbol = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Prime field GF(q), 2 <= q <= 2^16. A Field is just its modulus; two Field
/// values with the same q denote the same field.
class Field {
 public:
  /// Throws NotPrime / TooLarge.
  explicit Field(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }

  Symbol reduce(std::uint64_t v) const noexcept {
    return static_cast<Symbol>(v % q_);
  }
  Symbol add(Symbol a, Symbol b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Symbol sub(Symbol a, Symbol b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Symbol neg(Symbol a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Symbol pow(Symbol a, std::uint64_t e) const noexcept;
  /// Throws DivideByZero for a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  bool contains(Symbol a) const noexcept { return a < q_; }

  /// Throws InvalidArgument naming `what` if any symbol is >= q.
  void check_symbols(std::span<const Symbol> symbols, const char* what) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t v) noexcept;

/// Throws FieldMismatch unless a == b.
void require_same_field(const Field& a, const Field& b);

class FieldElement {
 public:
  /// `value` is reduced mod q.
  FieldElement(const Field& field, std::uint64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldElement(const Field& field, Symbol value, int /*already reduced*/)
      : field_(field), value_(value) {}

  Field field_;
  Symbol value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace ltc
