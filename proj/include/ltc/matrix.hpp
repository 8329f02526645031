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

namespace ltc {

/// Dense row-major matrix of residues. Arithmetic goes through a Field
/// passed explicitly, so a Matrix is plain data.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> data);

  static Matrix from_rows(const std::vector<std::vector<Symbol>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<Symbol>& data() const noexcept { return data_; }

  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

/// Result of Gauss-Jordan elimination: reduced = transform * input, with
/// the first `pivots.size()` rows of `reduced` forming the RREF basis and the
/// remaining rows zero.
struct RowReduction {
  Matrix reduced;
  Matrix transform;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row

  std::size_t rank() const noexcept { return pivots.size(); }
};

RowReduction row_reduce(const Field& field, const Matrix& m);

std::size_t rank(const Field& field, const Matrix& m);

/// Indices of a maximal independent subset of rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Field& field, const Matrix& m);

/// Basis of {x : m x^T = 0} as rows of the returned matrix.
Matrix null_space(const Field& field, const Matrix& m);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);

/// x * m for a row vector x.
std::vector<Symbol> row_times(const Field& field, std::span<const Symbol> x,
                              const Matrix& m);

/// Solves x * m = y for a row vector x; nullopt if inconsistent. When the
/// solution is not unique the free coordinates are set to zero.
std::optional<std::vector<Symbol>> solve_left(const Field& field,
                                              const Matrix& m,
                                              std::span<const Symbol> y);

/// Kronecker product a (x) b: entry (i*b.rows()+k, j*b.cols()+l) = a(i,j)*b(k,l).
Matrix kronecker(const Field& field, const Matrix& a, const Matrix& b);

}  // namespace ltc
