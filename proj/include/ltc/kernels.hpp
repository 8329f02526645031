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

// Brute-force oracle kernels. Each kernel has a serial reference path and an
// OpenMP path selected by Exec; both return identical results (ties are
// merged by message index, not by completion order). Inside an enclosing
// parallel region the parallel path degrades to serial.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>

#include <omp.h>

#include "ltc/field.hpp"
#include "ltc/matrix.hpp"

namespace ltc::kernels {

enum class Exec { kSerial, kParallel };

/// q^k, or throws TooLargeToEnumerate when it exceeds the configured
/// enumeration threshold.
std::uint64_t checked_message_count(const Field& field, std::size_t k);

/// Minimum Hamming weight over nonzero x * generator. Returns 0 if the
/// generator has no rows.
std::size_t min_nonzero_weight(const Field& field, const Matrix& generator,
                               Exec exec = Exec::kParallel);

struct NearestResult {
  std::uint64_t message_index = 0;  // lexicographic rank of the message
  std::size_t distance = 0;         // Hamming distance to the word
};

/// Codeword x * generator closest to `word`; ties go to the smallest message
/// in lexicographic order (x_0 most significant).
NearestResult nearest_codeword(const Field& field, const Matrix& generator,
                               std::span<const Symbol> word,
                               Exec exec = Exec::kParallel);

/// Message digits of a lexicographic index, x_0 most significant.
std::vector<Symbol> message_from_index(const Field& field, std::size_t k,
                                       std::uint64_t index);

/// Calls fn(i) for i in [0, count). Parallel iterations run in unspecified
/// order; fn must only write to slot i of its outputs.
template <class Fn>
void for_each_index(std::size_t count, Exec exec, Fn&& fn) {
  if (exec == Exec::kSerial || omp_in_parallel() || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const auto n = static_cast<std::int64_t>(count);
  std::exception_ptr failure;
  std::int64_t failed_at = n;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ltc_for_each_index)
      if (i < failed_at) {
        failed_at = i;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ltc::kernels
