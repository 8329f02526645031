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

#include <atomic>
#include <cstdint>

namespace ltc {

/// Process-wide limits. Oracles refuse work above these rather than sample.
struct Limits {
  /// Max number of codewords (q^k) a brute-force oracle will enumerate.
  std::uint64_t enumeration_threshold = std::uint64_t{1} << 24;
  /// Max adjacency entries (m_right * t_degree) stored explicitly per graph.
  std::uint64_t adjacency_budget = std::uint64_t{1} << 26;
  /// Max left vertices of any graph / entries of any word.
  std::uint64_t max_word_length = std::uint64_t{1} << 32;
};

Limits limits();
void set_limits(const Limits& l);

/// Restores the previous limits on scope exit.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { set_limits(l); }
  ~ScopedLimits() { set_limits(saved_); }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace ltc
