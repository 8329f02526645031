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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ltc/field.hpp"
#include "ltc/kernels.hpp"
#include "ltc/matrix.hpp"
#include "ltc/rational.hpp"

namespace ltc {

/// A word of Σ^n.
struct Word {
  Field field;
  std::vector<Symbol> symbols;

  Word(const Field& f, std::vector<Symbol> s) : field(f), symbols(std::move(s)) {}
  static Word zeros(const Field& f, std::size_t n) { return {f, std::vector<Symbol>(n, 0)}; }

  std::size_t size() const noexcept { return symbols.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Notice attached to a code whose supplied generator rows were dependent.
struct RankDeficiency {
  std::size_t supplied_rows;
  std::size_t rank;
};

/// Linear [n,k,d] code over a prime field. The generator holds k independent
/// rows in the order they were supplied (so messages keep their meaning);
/// a reduced echelon copy drives membership and message recovery.
class LinearCode {
 public:
  /// `generator` must have full row rank.
  LinearCode(const Field& field, Matrix generator,
             std::optional<std::size_t> known_distance = std::nullopt,
             std::optional<RankDeficiency> deficiency = std::nullopt);

  const Field& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }
  const Matrix& echelon() const noexcept { return echelon_; }
  /// Pivot columns of the echelon form: an information set.
  const std::vector<std::size_t>& information_set() const noexcept { return pivots_; }

  std::optional<std::size_t> known_distance() const noexcept { return known_distance_; }
  std::optional<RankDeficiency> rank_deficiency() const noexcept { return deficiency_; }

  LinearCode with_known_distance(std::size_t d) const;

  /// (n-k) x n matrix H with H * generator^T = 0, in systematic form.
  Matrix parity_check() const;

  /// True iff H w = 0; checked as w == w[info set] * echelon.
  bool contains(std::span<const Symbol> w) const;

  /// The unique message x with x * generator == w, or nullopt if w is not a
  /// codeword.
  std::optional<std::vector<Symbol>> message_of(std::span<const Symbol> w) const;

 private:
  Field field_;
  Matrix generator_;
  Matrix echelon_;
  Matrix to_message_;  // x = w[pivots] * to_message_ for codewords w
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> non_pivots_;
  std::optional<std::size_t> known_distance_;
  std::optional<RankDeficiency> deficiency_;
};

/// Builds a code from arbitrary rows. Dependent rows are dropped (first
/// independent rows kept, in order) and reported via rank_deficiency().
/// Throws RankDeficient if every row is zero, InvalidArgument on symbols >= q.
LinearCode make_generator_code(const Field& field, const Matrix& rows);
LinearCode make_generator_code(const Field& field,
                               const std::vector<std::vector<Symbol>>& rows);

/// RS[n,k,n-k+1] with evaluation points 0..n-1 and Vandermonde rows
/// (p^i : p in points). Throws TooLong if n > q.
LinearCode make_reed_solomon(const Field& field, std::size_t n, std::size_t k);

/// [n,1,n] repetition code.
LinearCode make_repetition(const Field& field, std::size_t n);

/// Σ^n itself, [n,n,1].
LinearCode make_full_code(const Field& field, std::size_t n);

Word encode(const LinearCode& code, std::span<const Symbol> message);

bool is_codeword(const LinearCode& code, const Word& w);

struct Distance {
  std::size_t hamming;
  Rational relative;
};

Distance distance(const Word& x, const Word& y);
std::size_t hamming_distance(std::span<const Symbol> x, std::span<const Symbol> y);

/// Minimum weight of a nonzero codeword (= Δ(C)); throws TooLargeToEnumerate
/// when q^k exceeds the enumeration threshold. A k = 0 code has no nonzero
/// codewords; length() + 1 is returned by convention.
std::size_t min_distance(const LinearCode& code,
                         kernels::Exec exec = kernels::Exec::kParallel);

struct Nearest {
  Word codeword;
  std::vector<Symbol> message;
  std::size_t hamming;
  Rational delta;
};

/// δ_C(w) with the codeword achieving it; ties go to the lexicographically
/// smallest message.
Nearest nearest_codeword(const LinearCode& code, const Word& w,
                         kernels::Exec exec = kernels::Exec::kParallel);

/// Code spanned by the generator columns at `indices` (0-based, strictly
/// increasing). Throws EmptyProjection / IndexOutOfRange.
LinearCode project_code(const LinearCode& code, std::span<const std::size_t> indices);

/// True iff the projection of codewords to `indices` is injective, i.e. the
/// selected generator columns have rank k.
bool projection_is_injective(const LinearCode& code,
                             std::span<const std::size_t> indices);

}  // namespace ltc
