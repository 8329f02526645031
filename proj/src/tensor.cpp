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

#include "ltc/tensor.hpp"

#include <atomic>
#include <string>
#include <utility>

#include "ltc/config.hpp"

namespace ltc {

std::size_t checked_volume(std::span<const std::size_t> shape) {
  const std::uint64_t cap = limits().max_word_length;
  std::uint64_t v = 1;
  for (std::size_t n : shape) {
    if (n == 0) throw Error(ErrorKind::kInvalidArgument, "zero-length axis");
    if (v > cap / n) {
      throw Error(ErrorKind::kTooLarge,
                  "tensor volume exceeds limit " + std::to_string(cap));
    }
    v *= n;
  }
  return static_cast<std::size_t>(v);
}

TensorWord::TensorWord(const Field& field, std::vector<std::size_t> shape,
                       std::vector<Symbol> symbols)
    : field_(field), shape_(std::move(shape)), symbols_(std::move(symbols)) {
  const std::size_t volume = checked_volume(shape_);
  if (symbols_.size() != volume) {
    throw Error(ErrorKind::kShapeMismatch,
                std::to_string(symbols_.size()) + " symbols for volume " +
                    std::to_string(volume));
  }
  field_.check_symbols(symbols_, "tensor word");
}

TensorWord TensorWord::zeros(const Field& field, std::vector<std::size_t> shape) {
  const std::size_t volume = checked_volume(shape);
  return {field, std::move(shape), std::vector<Symbol>(volume, 0)};
}

std::size_t TensorWord::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "index of order " + std::to_string(index.size()) +
                    " for word of order " + std::to_string(shape_.size()));
  }
  std::size_t off = 0;
  for (std::size_t b = 0; b < shape_.size(); ++b) {
    if (index[b] >= shape_[b]) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "coordinate " + std::to_string(index[b]) + " on axis " +
                      std::to_string(b) + " of length " + std::to_string(shape_[b]));
    }
    off = off * shape_[b] + index[b];
  }
  return off;
}

namespace {

// (outer, len, stride) decomposition of a row-major shape around `axis`.
struct AxisGeometry {
  std::size_t outer = 1;
  std::size_t length = 1;
  std::size_t stride = 1;
};

AxisGeometry geometry(std::span<const std::size_t> shape, std::size_t axis) {
  AxisGeometry g;
  for (std::size_t b = 0; b < axis; ++b) g.outer *= shape[b];
  g.length = shape[axis];
  for (std::size_t b = axis + 1; b < shape.size(); ++b) g.stride *= shape[b];
  return g;
}

void check_axis(std::size_t axis, std::size_t order) {
  if (axis >= order) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "axis " + std::to_string(axis) + " of order-" + std::to_string(order) +
                    " word");
  }
}

}  // namespace

TensorWord axis_slice(const TensorWord& r, std::size_t axis, std::size_t i) {
  check_axis(axis, r.order());
  if (i >= r.shape()[axis]) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "slice " + std::to_string(i) + " on axis of length " +
                    std::to_string(r.shape()[axis]));
  }
  const AxisGeometry g = geometry(r.shape(), axis);
  std::vector<std::size_t> shape;
  for (std::size_t b = 0; b < r.order(); ++b) {
    if (b != axis) shape.push_back(r.shape()[b]);
  }
  std::vector<Symbol> out;
  out.reserve(g.outer * g.stride);
  auto src = r.symbols();
  for (std::size_t o = 0; o < g.outer; ++o) {
    const std::size_t base = (o * g.length + i) * g.stride;
    out.insert(out.end(), src.begin() + base, src.begin() + base + g.stride);
  }
  return {r.field(), std::move(shape), std::move(out)};
}

TensorWord map_lines(
    const TensorWord& r, std::size_t axis, std::size_t new_length,
    const std::function<std::vector<Symbol>(std::span<const Symbol>)>& fn) {
  check_axis(axis, r.order());
  const AxisGeometry g = geometry(r.shape(), axis);
  std::vector<std::size_t> shape = r.shape();
  shape[axis] = new_length;
  TensorWord out = TensorWord::zeros(r.field(), shape);
  auto src = r.symbols();
  auto dst = out.symbols();
  std::vector<Symbol> line(g.length);
  for (std::size_t o = 0; o < g.outer; ++o) {
    for (std::size_t s = 0; s < g.stride; ++s) {
      for (std::size_t t = 0; t < g.length; ++t) {
        line[t] = src[(o * g.length + t) * g.stride + s];
      }
      const std::vector<Symbol> mapped = fn(line);
      if (mapped.size() != new_length) {
        throw Error(ErrorKind::kShapeMismatch, "line map returned wrong length");
      }
      for (std::size_t t = 0; t < new_length; ++t) {
        dst[(o * new_length + t) * g.stride + s] = mapped[t];
      }
    }
  }
  return out;
}

TensorWord restrict_to(const TensorWord& r,
                       const std::vector<std::vector<std::size_t>>& index_sets) {
  if (index_sets.size() != r.order()) {
    throw Error(ErrorKind::kShapeMismatch, "one index set per axis required");
  }
  TensorWord cur = r;
  for (std::size_t b = 0; b < r.order(); ++b) {
    const auto& idx = index_sets[b];
    if (idx.empty()) throw Error(ErrorKind::kEmptyProjection, "empty index set");
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= r.shape()[b] || (j > 0 && idx[j] <= idx[j - 1])) {
        throw Error(ErrorKind::kIndexOutOfRange,
                    "index set for axis " + std::to_string(b) +
                        " must be increasing and in range");
      }
    }
    cur = map_lines(cur, b, idx.size(), [&](std::span<const Symbol> line) {
      std::vector<Symbol> out(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) out[j] = line[idx[j]];
      return out;
    });
  }
  return cur;
}

TensorCode::TensorCode(std::vector<LinearCode> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "tensor code needs at least one factor");
  }
  for (const LinearCode& c : factors_) require_same_field(c.field(), factors_.front().field());
}

std::vector<std::size_t> TensorCode::shape() const {
  std::vector<std::size_t> s;
  for (const LinearCode& c : factors_) s.push_back(c.length());
  return s;
}

std::vector<std::size_t> TensorCode::message_shape() const {
  std::vector<std::size_t> s;
  for (const LinearCode& c : factors_) s.push_back(c.dimension());
  return s;
}

std::size_t TensorCode::length() const { return checked_volume(shape()); }

std::size_t TensorCode::dimension() const { return checked_volume(message_shape()); }

std::optional<std::size_t> TensorCode::known_distance() const {
  std::size_t d = 1;
  for (const LinearCode& c : factors_) {
    if (!c.known_distance()) return std::nullopt;
    d *= *c.known_distance();
  }
  return d;
}

TensorCode TensorCode::without_axis(std::size_t axis) const {
  check_axis(axis, order());
  if (order() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "cannot drop the only axis");
  }
  std::vector<LinearCode> rest;
  for (std::size_t b = 0; b < order(); ++b) {
    if (b != axis) rest.push_back(factors_[b]);
  }
  return TensorCode(std::move(rest));
}

TensorWord TensorCode::encode(std::span<const Symbol> message) const {
  TensorWord cur(field(), message_shape(),
                 std::vector<Symbol>(message.begin(), message.end()));
  for (std::size_t b = 0; b < order(); ++b) {
    const LinearCode& c = factors_[b];
    cur = map_lines(cur, b, c.length(), [&](std::span<const Symbol> line) {
      return row_times(c.field(), line, c.generator());
    });
  }
  return cur;
}

LinearCode TensorCode::as_linear_code() const {
  // Guard the explicit Kronecker matrix against the adjacency budget.
  const std::uint64_t entries =
      static_cast<std::uint64_t>(length()) * static_cast<std::uint64_t>(dimension());
  if (entries > limits().adjacency_budget * 4) {
    throw Error(ErrorKind::kTooLarge,
                "explicit product generator would have " + std::to_string(entries) +
                    " entries");
  }
  Matrix g = factors_.front().generator();
  for (std::size_t b = 1; b < order(); ++b) g = kronecker(field(), g, factors_[b].generator());
  return LinearCode(field(), std::move(g), known_distance());
}

LinearCode tensor_product(const LinearCode& c1, const LinearCode& c2) {
  return TensorCode({c1, c2}).as_linear_code();
}

TensorCode tensor_power(const LinearCode& c, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "tensor power needs m >= 1");
  return TensorCode(std::vector<LinearCode>(m, c));
}

namespace {

void check_shape(const TensorCode& code, const TensorWord& r) {
  require_same_field(code.field(), r.field());
  if (r.shape() != code.shape()) {
    throw Error(ErrorKind::kShapeMismatch, "word shape does not match code shape");
  }
}

}  // namespace

bool tensor_membership(const TensorCode& code, const TensorWord& r, kernels::Exec exec) {
  check_shape(code, r);
  auto src = r.symbols();
  for (std::size_t b = 0; b < code.order(); ++b) {
    const AxisGeometry g = geometry(r.shape(), b);
    const LinearCode& c = code.factor(b);
    std::atomic<bool> ok{true};
    kernels::for_each_index(g.outer * g.stride, exec, [&](std::size_t l) {
      if (!ok.load(std::memory_order_relaxed)) return;
      const std::size_t o = l / g.stride;
      const std::size_t s = l % g.stride;
      std::vector<Symbol> line(g.length);
      for (std::size_t t = 0; t < g.length; ++t) {
        line[t] = src[(o * g.length + t) * g.stride + s];
      }
      if (!c.contains(line)) ok.store(false, std::memory_order_relaxed);
    });
    if (!ok.load()) return false;
  }
  return true;
}

bool generator_membership(const TensorCode& code, const TensorWord& r) {
  check_shape(code, r);
  return code.as_linear_code().contains(r.symbols());
}

TensorWord extend_codeword(const TensorCode& code,
                           const std::vector<std::vector<std::size_t>>& index_sets,
                           const TensorWord& partial) {
  require_same_field(code.field(), partial.field());
  if (index_sets.size() != code.order()) {
    throw Error(ErrorKind::kShapeMismatch, "one index set per axis required");
  }
  std::vector<LinearCode> projected;
  for (std::size_t b = 0; b < code.order(); ++b) {
    const LinearCode& c = code.factor(b);
    const std::size_t d = c.known_distance() ? *c.known_distance() : min_distance(c);
    const std::size_t needed = c.length() - d + 1;
    if (index_sets[b].size() < needed) {
      throw Error(ErrorKind::kUnderdetermined,
                  "axis " + std::to_string(b) + ": |I| = " +
                      std::to_string(index_sets[b].size()) + " < n - d + 1 = " +
                      std::to_string(needed));
    }
    if (partial.order() != code.order() || partial.shape()[b] != index_sets[b].size()) {
      throw Error(ErrorKind::kShapeMismatch, "partial word shape does not match index sets");
    }
    projected.push_back(project_code(c, index_sets[b]));
  }

  TensorWord cur = partial;
  for (std::size_t b = 0; b < code.order(); ++b) {
    const LinearCode& full = code.factor(b);
    const LinearCode& proj = projected[b];
    cur = map_lines(cur, b, full.length(), [&](std::span<const Symbol> line) {
      // Injective projection keeps every generator row, so the projected
      // message is the full message.
      std::optional<std::vector<Symbol>> msg = proj.message_of(line);
      if (!msg) {
        throw Error(ErrorKind::kNotACodeword,
                    "partial word is not in the projected product code (axis " +
                        std::to_string(b) + ")");
      }
      return row_times(full.field(), *msg, full.generator());
    });
  }
  if (restrict_to(cur, index_sets) != partial) {
    throw Error(ErrorKind::kNotACodeword, "extension disagrees with the partial word");
  }
  return cur;
}

}  // namespace ltc
