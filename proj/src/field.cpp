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

#include "ltc/field.hpp"

#include <ostream>
#include <string>

namespace ltc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kDivideByZero: return "DivideByZero";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kTooLong: return "TooLong";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorKind::kEmptyProjection: return "EmptyProjection";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kNotACodeword: return "NotACodeword";
    case ErrorKind::kUnderdetermined: return "Underdetermined";
    case ErrorKind::kRaggedLists: return "RaggedLists";
    case ErrorKind::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::kDegreeMismatch: return "DegreeMismatch";
    case ErrorKind::kInapplicable: return "Inapplicable";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q > kMaxFieldOrder) {
    throw Error(ErrorKind::kTooLarge,
                "field order " + std::to_string(q) + " exceeds 2^16");
  }
  if (!is_prime(q)) {
    throw Error(ErrorKind::kNotPrime, std::to_string(q) + " is not prime");
  }
}

Symbol Field::pow(Symbol a, std::uint64_t e) const noexcept {
  Symbol result = reduce(1);
  Symbol base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Symbol Field::inv(Symbol a) const {
  if (a % q_ == 0) throw Error(ErrorKind::kDivideByZero, "inverse of zero");
  // Fermat: a^(q-2).
  return pow(a, q_ - 2);
}

void Field::check_symbols(std::span<const Symbol> symbols,
                          const char* what) const {
  for (Symbol s : symbols) {
    if (s >= q_) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(what) + ": symbol " + std::to_string(s) +
                      " not in [0," + std::to_string(q_) + ")");
    }
  }
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) {
    throw Error(ErrorKind::kFieldMismatch,
                "GF(" + std::to_string(a.order()) + ") vs GF(" +
                    std::to_string(b.order()) + ")");
  }
}

FieldElement FieldElement::inv() const {
  return {field_, field_.inv(value_), 0};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_.pow(value_, e), 0};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.add(a.value_, b.value_), 0};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.sub(a.value_, b.value_), 0};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.mul(a.value_, b.value_), 0};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.div(a.value_, b.value_), 0};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.field().order() << ")";
}

}  // namespace ltc
