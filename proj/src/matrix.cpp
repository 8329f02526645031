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

#include "ltc/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ltc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::kShapeMismatch,
                "matrix data has " + std::to_string(data_.size()) +
                    " entries, expected " + std::to_string(rows * cols));
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kShapeMismatch,
                  "row " + std::to_string(r) + " has length " +
                      std::to_string(rows[r].size()) + ", expected " +
                      std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out(r, c) = (*this)(r, columns[c]);
    }
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto src = row(rows[r]);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

namespace {

// row[dst] += factor * row[src] on both the working matrix and transform.
void axpy_row(const Field& f, std::span<Symbol> dst, std::span<const Symbol> src,
              Symbol factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] = f.add(dst[c], f.mul(factor, src[c]));
  }
}

void scale_row(const Field& f, std::span<Symbol> row, Symbol factor) {
  for (Symbol& v : row) v = f.mul(v, factor);
}

}  // namespace

RowReduction row_reduce(const Field& field, const Matrix& m) {
  RowReduction out{m, Matrix::identity(m.rows()), {}};
  Matrix& a = out.reduced;
  Matrix& t = out.transform;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row) {
      std::swap_ranges(a.row(found).begin(), a.row(found).end(),
                       a.row(pivot_row).begin());
      std::swap_ranges(t.row(found).begin(), t.row(found).end(),
                       t.row(pivot_row).begin());
    }
    const Symbol inv = field.inv(a(pivot_row, col));
    scale_row(field, a.row(pivot_row), inv);
    scale_row(field, t.row(pivot_row), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Symbol factor = field.neg(a(r, col));
      axpy_row(field, a.row(r), a.row(pivot_row), factor);
      axpy_row(field, t.row(r), t.row(pivot_row), factor);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const Field& field, const Matrix& m) {
  return row_reduce(field, m).rank();
}

std::vector<std::size_t> independent_rows(const Field& field, const Matrix& m) {
  // Incremental echelon basis: keep a row iff it is not reduced to zero.
  std::vector<std::size_t> kept;
  std::vector<std::vector<Symbol>> basis;
  std::vector<std::size_t> basis_pivot;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Symbol> v(m.row(r).begin(), m.row(r).end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Symbol coeff = v[basis_pivot[b]];
      if (coeff != 0) axpy_row(field, v, basis[b], field.neg(coeff));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    scale_row(field, v, field.inv(v[p]));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Symbol coeff = basis[b][p];
      if (coeff != 0) axpy_row(field, basis[b], v, field.neg(coeff));
    }
    basis.push_back(std::move(v));
    basis_pivot.push_back(p);
    kept.push_back(r);
  }
  return kept;
}

Matrix null_space(const Field& field, const Matrix& m) {
  const RowReduction rr = row_reduce(field, m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  Matrix basis(n - rr.rank(), n);
  std::size_t out_row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(out_row, free) = 1;
    for (std::size_t i = 0; i < rr.rank(); ++i) {
      basis(out_row, rr.pivots[i]) = field.neg(rr.reduced(i, free));
    }
    ++out_row;
  }
  return basis;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kShapeMismatch, "matrix product inner dimensions differ");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      axpy_row(field, out.row(i), b.row(k), aik);
    }
  }
  return out;
}

std::vector<Symbol> row_times(const Field& field, std::span<const Symbol> x,
                              const Matrix& m) {
  if (x.size() != m.rows()) {
    throw Error(ErrorKind::kLengthMismatch,
                "vector of length " + std::to_string(x.size()) + " times " +
                    std::to_string(m.rows()) + "-row matrix");
  }
  std::vector<Symbol> out(m.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) axpy_row(field, out, m.row(i), x[i]);
  return out;
}

std::optional<std::vector<Symbol>> solve_left(const Field& field,
                                              const Matrix& m,
                                              std::span<const Symbol> y) {
  if (y.size() != m.cols()) {
    throw Error(ErrorKind::kLengthMismatch, "right-hand side length mismatch");
  }
  // x m = y  <=>  m^T x^T = y^T. Reduce [m^T | y^T].
  const Matrix mt = m.transpose();
  Matrix aug(mt.rows(), mt.cols() + 1);
  for (std::size_t r = 0; r < mt.rows(); ++r) {
    std::copy(mt.row(r).begin(), mt.row(r).end(), aug.row(r).begin());
    aug(r, mt.cols()) = y[r];
  }
  const RowReduction rr = row_reduce(field, aug);
  std::vector<Symbol> x(m.rows(), 0);
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    const std::size_t p = rr.pivots[i];
    if (p == mt.cols()) return std::nullopt;
    x[p] = rr.reduced(i, mt.cols());
  }
  return x;
}

Matrix kronecker(const Field& field, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Symbol aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = field.mul(aij, b(k, l));
        }
      }
    }
  }
  return out;
}

}  // namespace ltc
