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

#include "ltc/kernels.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "ltc/config.hpp"

namespace ltc {

namespace {
std::atomic<std::uint64_t> g_enumeration_threshold{Limits{}.enumeration_threshold};
std::atomic<std::uint64_t> g_adjacency_budget{Limits{}.adjacency_budget};
std::atomic<std::uint64_t> g_max_word_length{Limits{}.max_word_length};
}  // namespace

Limits limits() {
  return {g_enumeration_threshold.load(), g_adjacency_budget.load(),
          g_max_word_length.load()};
}

void set_limits(const Limits& l) {
  g_enumeration_threshold.store(l.enumeration_threshold);
  g_adjacency_budget.store(l.adjacency_budget);
  g_max_word_length.store(l.max_word_length);
}

}  // namespace ltc

namespace ltc::kernels {

std::uint64_t checked_message_count(const Field& field, std::size_t k) {
  const std::uint64_t threshold = limits().enumeration_threshold;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > threshold / field.order()) {
      throw Error(ErrorKind::kTooLargeToEnumerate,
                  "q^k = " + std::to_string(field.order()) + "^" +
                      std::to_string(k) + " exceeds threshold " +
                      std::to_string(threshold));
    }
    count *= field.order();
  }
  return count;
}

std::vector<Symbol> message_from_index(const Field& field, std::size_t k,
                                       std::uint64_t index) {
  std::vector<Symbol> digits(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    digits[i] = static_cast<Symbol>(index % field.order());
    index /= field.order();
  }
  return digits;
}

namespace {

// Walks messages [begin, end) in lexicographic order, keeping the codeword
// x * G up to date with one row addition per odometer digit change.
template <class Visit>
void walk_codewords(const Field& f, const Matrix& g, std::uint64_t begin,
                    std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const std::size_t k = g.rows();
  std::vector<Symbol> digits = message_from_index(f, k, begin);
  std::vector<Symbol> codeword = row_times(f, digits, g);
  for (std::uint64_t index = begin;;) {
    if (!visit(index, std::span<const Symbol>(codeword))) return;
    if (++index == end) return;
    for (std::size_t pos = k; pos-- > 0;) {
      auto row = g.row(pos);
      for (std::size_t c = 0; c < codeword.size(); ++c) {
        codeword[c] = f.add(codeword[c], row[c]);
      }
      if (++digits[pos] < f.order()) break;
      digits[pos] = 0;
    }
  }
}

std::size_t weight(std::span<const Symbol> w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

// Distance with early exit once `bound` is exceeded (returns bound + 1).
std::size_t bounded_distance(std::span<const Symbol> a,
                             std::span<const Symbol> b, std::size_t bound) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] && ++d > bound) return d;
  }
  return d;
}

struct Chunk {
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<Chunk> split(std::uint64_t count, std::uint64_t min_chunk) {
  const std::uint64_t threads = static_cast<std::uint64_t>(omp_get_max_threads());
  std::uint64_t pieces = std::max<std::uint64_t>(1, threads * 4);
  pieces = std::min(pieces, std::max<std::uint64_t>(1, count / min_chunk));
  std::vector<Chunk> chunks;
  const std::uint64_t step = count / pieces;
  const std::uint64_t extra = count % pieces;
  std::uint64_t at = 0;
  for (std::uint64_t p = 0; p < pieces; ++p) {
    const std::uint64_t len = step + (p < extra ? 1 : 0);
    chunks.push_back({at, at + len});
    at += len;
  }
  return chunks;
}

bool use_parallel(Exec exec) {
  return exec == Exec::kParallel && !omp_in_parallel() && omp_get_max_threads() > 1;
}

}  // namespace

std::size_t min_nonzero_weight(const Field& field, const Matrix& generator,
                               Exec exec) {
  if (generator.rows() == 0) return 0;
  const std::uint64_t count = checked_message_count(field, generator.rows());
  auto scan = [&](Chunk c) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    walk_codewords(field, generator, std::max<std::uint64_t>(c.begin, 1), c.end,
                   [&](std::uint64_t, std::span<const Symbol> cw) {
                     best = std::min(best, weight(cw));
                     return best > 1;
                   });
    return best;
  };
  if (!use_parallel(exec)) return scan({0, count});

  const std::vector<Chunk> chunks = split(count, 64);
  std::vector<std::size_t> partial(chunks.size());
  const auto n = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) partial[i] = scan(chunks[i]);
  return *std::min_element(partial.begin(), partial.end());
}

NearestResult nearest_codeword(const Field& field, const Matrix& generator,
                               std::span<const Symbol> word, Exec exec) {
  if (word.size() != generator.cols()) {
    throw Error(ErrorKind::kLengthMismatch,
                "word length " + std::to_string(word.size()) + " vs code length " +
                    std::to_string(generator.cols()));
  }
  if (generator.rows() == 0) return {0, weight(word)};
  const std::uint64_t count = checked_message_count(field, generator.rows());
  auto scan = [&](Chunk c) {
    NearestResult best{c.begin, std::numeric_limits<std::size_t>::max()};
    walk_codewords(field, generator, c.begin, c.end,
                   [&](std::uint64_t index, std::span<const Symbol> cw) {
                     // Strict improvement keeps the first (smallest) index.
                     const std::size_t bound =
                         best.distance == 0 ? 0 : best.distance - 1;
                     const std::size_t d = bounded_distance(cw, word, bound);
                     if (d < best.distance) best = {index, d};
                     return best.distance > 0;
                   });
    return best;
  };
  if (!use_parallel(exec)) return scan({0, count});

  const std::vector<Chunk> chunks = split(count, 64);
  std::vector<NearestResult> partial(chunks.size());
  const auto n = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) partial[i] = scan(chunks[i]);
  NearestResult best = partial.front();
  for (const NearestResult& r : partial) {
    if (r.distance < best.distance) best = r;  // chunks are in index order
  }
  return best;
}

}  // namespace ltc::kernels
