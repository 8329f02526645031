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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltc/code.hpp"
#include "ltc/tester.hpp"

namespace ltc {

/// One entry of a corpus spec. Kinds:
///   uniform                 uniformly random words
///   codeword                random codewords of the full code
///   codeword_plus_weight    codeword + error of exactly `weight` symbols
///   codeword_plus_random    codeword + error of log-uniform weight in [1, n/4]
///   planted_slice           random word with a random small-code codeword
///                           written onto one random view
///   exhaustive              every word of Σ^n (count ignored)
///   low_weight              every word of weight <= `weight` (count ignored)
struct CorpusItem {
  std::string kind;
  std::size_t count = 0;
  std::size_t weight = 0;
};

/// Parses "uniform:300,codeword_plus_weight_3:300,planted_slice:400".
/// "mixed:N" expands to uniform, codeword_plus_random and planted_slice
/// thirds; "exhaustive" and "low_weight_W" take no count.
std::vector<CorpusItem> parse_corpus_spec(const std::string& text);

struct CorpusWord {
  Word word;
  std::string kind;
  std::size_t item = 0;   // index of the corpus item that produced it
  std::size_t index = 0;  // index within that item
  std::size_t weight = 0; // error weight, when meaningful
  std::optional<std::size_t> planted_view;
};

/// Deterministic in (instance, items, seed); word i of item k uses its own
/// derived RNG stream, so generation order does not matter.
std::vector<CorpusWord> generate_corpus(const TestInstance& inst,
                                        const std::vector<CorpusItem>& items,
                                        std::uint64_t seed);

}  // namespace ltc
