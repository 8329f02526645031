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

#include "ltc/code.hpp"

#include <string>
#include <utility>

namespace ltc {

LinearCode::LinearCode(const Field& field, Matrix generator,
                       std::optional<std::size_t> known_distance,
                       std::optional<RankDeficiency> deficiency)
    : field_(field),
      generator_(std::move(generator)),
      known_distance_(known_distance),
      deficiency_(deficiency) {
  field_.check_symbols(generator_.data(), "generator");
  RowReduction rr = row_reduce(field_, generator_);
  if (rr.rank() != generator_.rows()) {
    throw Error(ErrorKind::kRankDeficient,
                "generator has " + std::to_string(generator_.rows()) +
                    " rows but rank " + std::to_string(rr.rank()));
  }
  echelon_ = std::move(rr.reduced);
  to_message_ = std::move(rr.transform);
  pivots_ = std::move(rr.pivots);
  std::vector<bool> is_pivot(length(), false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < length(); ++c) {
    if (!is_pivot[c]) non_pivots_.push_back(c);
  }
}

LinearCode LinearCode::with_known_distance(std::size_t d) const {
  LinearCode copy = *this;
  copy.known_distance_ = d;
  return copy;
}

Matrix LinearCode::parity_check() const {
  const std::size_t n = length();
  const std::size_t k = dimension();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  Matrix h(n - k, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    h(r, c) = 1;
    for (std::size_t i = 0; i < k; ++i) h(r, pivots_[i]) = field_.neg(echelon_(i, c));
    ++r;
  }
  return h;
}

bool LinearCode::contains(std::span<const Symbol> w) const {
  if (w.size() != length()) {
    throw Error(ErrorKind::kLengthMismatch,
                "word length " + std::to_string(w.size()) + " vs code length " +
                    std::to_string(length()));
  }
  // Non-pivot coordinate c must equal sum_i w[p_i] * echelon(i, c).
  const std::size_t k = dimension();
  for (std::size_t c : non_pivots_) {
    Symbol expect = 0;
    for (std::size_t i = 0; i < k; ++i) {
      expect = field_.add(expect, field_.mul(w[pivots_[i]], echelon_(i, c)));
    }
    if (expect != w[c]) return false;
  }
  return true;
}

std::optional<std::vector<Symbol>> LinearCode::message_of(
    std::span<const Symbol> w) const {
  if (!contains(w)) return std::nullopt;
  std::vector<Symbol> y(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) y[i] = w[pivots_[i]];
  return row_times(field_, y, to_message_);
}

LinearCode make_generator_code(const Field& field, const Matrix& rows) {
  if (rows.rows() == 0 || rows.cols() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "generator rows must be nonempty");
  }
  field.check_symbols(rows.data(), "generator");
  const std::vector<std::size_t> keep = independent_rows(field, rows);
  if (keep.empty()) {
    throw Error(ErrorKind::kRankDeficient, "generator rows are all zero");
  }
  std::optional<RankDeficiency> notice;
  if (keep.size() != rows.rows()) notice = RankDeficiency{rows.rows(), keep.size()};
  return LinearCode(field, rows.select_rows(keep), std::nullopt, notice);
}

LinearCode make_generator_code(const Field& field,
                               const std::vector<std::vector<Symbol>>& rows) {
  return make_generator_code(field, Matrix::from_rows(rows));
}

LinearCode make_reed_solomon(const Field& field, std::size_t n, std::size_t k) {
  if (n > field.order()) {
    throw Error(ErrorKind::kTooLong,
                "RS length " + std::to_string(n) + " exceeds q = " +
                    std::to_string(field.order()));
  }
  if (k < 1 || k > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "RS needs 1 <= k <= n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  Matrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      g(i, p) = field.pow(static_cast<Symbol>(p), i);  // 0^0 = 1
    }
  }
  return LinearCode(field, std::move(g), n - k + 1);
}

LinearCode make_repetition(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "repetition length must be >= 1");
  Matrix g(1, n);
  for (std::size_t c = 0; c < n; ++c) g(0, c) = 1;
  return LinearCode(field, std::move(g), n);
}

LinearCode make_full_code(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "full code length must be >= 1");
  return LinearCode(field, Matrix::identity(n), 1);
}

Word encode(const LinearCode& code, std::span<const Symbol> message) {
  if (message.size() != code.dimension()) {
    throw Error(ErrorKind::kLengthMismatch,
                "message length " + std::to_string(message.size()) +
                    " vs dimension " + std::to_string(code.dimension()));
  }
  code.field().check_symbols(message, "message");
  return {code.field(), row_times(code.field(), message, code.generator())};
}

bool is_codeword(const LinearCode& code, const Word& w) {
  require_same_field(code.field(), w.field);
  return code.contains(w.symbols);
}

std::size_t hamming_distance(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "lengths " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Distance distance(const Word& x, const Word& y) {
  require_same_field(x.field, y.field);
  const std::size_t d = hamming_distance(x.symbols, y.symbols);
  if (x.size() == 0) return {0, Rational(0)};
  return {d, ratio(static_cast<std::int64_t>(d), static_cast<std::int64_t>(x.size()))};
}

std::size_t min_distance(const LinearCode& code, kernels::Exec exec) {
  if (code.dimension() == 0) return code.length() + 1;
  return kernels::min_nonzero_weight(code.field(), code.generator(), exec);
}

Nearest nearest_codeword(const LinearCode& code, const Word& w, kernels::Exec exec) {
  require_same_field(code.field(), w.field);
  const kernels::NearestResult r =
      kernels::nearest_codeword(code.field(), code.generator(), w.symbols, exec);
  std::vector<Symbol> message =
      kernels::message_from_index(code.field(), code.dimension(), r.message_index);
  Word cw = encode(code, message);
  return {std::move(cw), std::move(message), r.distance,
          ratio(static_cast<std::int64_t>(r.distance),
                static_cast<std::int64_t>(code.length()))};
}

namespace {

void check_index_set(std::span<const std::size_t> indices, std::size_t n) {
  if (indices.empty()) throw Error(ErrorKind::kEmptyProjection, "empty index set");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "index " + std::to_string(indices[i]) + " >= length " +
                      std::to_string(n));
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "index set must be strictly increasing");
    }
  }
}

}  // namespace

LinearCode project_code(const LinearCode& code, std::span<const std::size_t> indices) {
  check_index_set(indices, code.length());
  const Matrix cols = code.generator().select_columns(indices);
  const std::vector<std::size_t> keep = independent_rows(code.field(), cols);
  if (keep.empty()) {
    throw Error(ErrorKind::kRankDeficient, "projection of the code is the zero code");
  }
  std::optional<std::size_t> d;
  if (indices.size() == code.length()) d = code.known_distance();
  return LinearCode(code.field(), cols.select_rows(keep), d);
}

bool projection_is_injective(const LinearCode& code,
                             std::span<const std::size_t> indices) {
  check_index_set(indices, code.length());
  return rank(code.field(), code.generator().select_columns(indices)) ==
         code.dimension();
}

}  // namespace ltc
