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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ltc/code.hpp"

namespace ltc {

// Layout convention used throughout ltc: a word of shape (n_1, ..., n_m) is
// stored row-major with axis 1 (index 0 here) slowest. Lines along axis b
// belong to factor C_b. For a 2x2 word
//
//   r[0,0]=a  r[0,1]=b
//   r[1,0]=c  r[1,1]=d     stored as [a, b, c, d]
//
// axis_slice(r, 0, 0) = [a, b] and axis_slice(r, 1, 0) = [a, c]. The lines
// along axis 1 ([a,b], [c,d]) must lie in C_2, the lines along axis 0
// ([a,c], [b,d]) in C_1. The flattened product code has generator
// M_1 (x) M_2 (Kronecker), and G^n_m views coincide with flattened slices.

/// Product of `shape`, throwing TooLarge above the configured word length.
std::size_t checked_volume(std::span<const std::size_t> shape);

class TensorWord {
 public:
  TensorWord(const Field& field, std::vector<std::size_t> shape,
             std::vector<Symbol> symbols);
  static TensorWord zeros(const Field& field, std::vector<std::size_t> shape);

  const Field& field() const noexcept { return field_; }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t order() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return symbols_.size(); }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::span<Symbol> symbols() noexcept { return symbols_; }

  /// Row-major offset of a 0-based multi-index; throws IndexOutOfRange.
  std::size_t offset(std::span<const std::size_t> index) const;
  Symbol at(std::span<const std::size_t> index) const { return symbols_[offset(index)]; }
  Symbol& at(std::span<const std::size_t> index) { return symbols_[offset(index)]; }

  Word as_word() const { return {field_, symbols_}; }

  friend bool operator==(const TensorWord&, const TensorWord&) = default;

 private:
  Field field_;
  std::vector<std::size_t> shape_;
  std::vector<Symbol> symbols_;
};

/// r_{b,i}: fixes coordinate `axis` to `i` (both 0-based). The result has
/// order m-1; for m = 1 it is a single symbol with empty shape.
TensorWord axis_slice(const TensorWord& r, std::size_t axis, std::size_t i);

/// Restriction of r to the grid I_1 x ... x I_m (0-based, increasing sets).
TensorWord restrict_to(const TensorWord& r,
                       const std::vector<std::vector<std::size_t>>& index_sets);

/// C_1 (x) ... (x) C_m over one field.
class TensorCode {
 public:
  /// Throws FieldMismatch / InvalidArgument (no factors).
  explicit TensorCode(std::vector<LinearCode> factors);

  const std::vector<LinearCode>& factors() const noexcept { return factors_; }
  const LinearCode& factor(std::size_t b) const { return factors_.at(b); }
  std::size_t order() const noexcept { return factors_.size(); }
  const Field& field() const noexcept { return factors_.front().field(); }

  std::vector<std::size_t> shape() const;
  std::vector<std::size_t> message_shape() const;
  std::size_t length() const;     // Π n_b
  std::size_t dimension() const;  // Π k_b
  /// Π d_b when every factor distance is known.
  std::optional<std::size_t> known_distance() const;

  /// Code with factor `axis` removed (the slice code); order must be >= 2.
  TensorCode without_axis(std::size_t axis) const;

  /// Encodes a message tensor of shape (k_1, ..., k_m), given row-major.
  TensorWord encode(std::span<const Symbol> message) const;

  /// Explicit flattened code with Kronecker generator; d_known = Π d_b.
  LinearCode as_linear_code() const;

 private:
  std::vector<LinearCode> factors_;
};

/// Explicit [n_1 n_2, k_1 k_2] code with generator M_1 (x) M_2.
LinearCode tensor_product(const LinearCode& c1, const LinearCode& c2);

/// C^m.
TensorCode tensor_power(const LinearCode& c, std::size_t m);

/// True iff every axis-parallel line along axis b lies in C_b.
bool tensor_membership(const TensorCode& code, const TensorWord& r,
                       kernels::Exec exec = kernels::Exec::kParallel);

/// Membership via the flattened Kronecker-generated code (cross-check path).
bool generator_membership(const TensorCode& code, const TensorWord& r);

/// Replaces every line along `axis` (length shape[axis]) with fn(line), which
/// must return `new_length` symbols.
TensorWord map_lines(
    const TensorWord& r, std::size_t axis, std::size_t new_length,
    const std::function<std::vector<Symbol>(std::span<const Symbol>)>& fn);

/// Unique codeword of `code` agreeing with `partial` on I_1 x ... x I_m.
/// Throws Underdetermined if some |I_b| < n_b - d_b + 1 and NotACodeword if
/// `partial` is not in the projected product code.
TensorWord extend_codeword(const TensorCode& code,
                           const std::vector<std::vector<std::size_t>>& index_sets,
                           const TensorWord& partial);

}  // namespace ltc
