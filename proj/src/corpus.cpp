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

#include "ltc/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "ltc/config.hpp"
#include "ltc/io.hpp"
#include "ltc/rng.hpp"

namespace ltc {

namespace {

std::size_t parse_count(const std::string& text, const std::string& item) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::kParse, "bad count in corpus item '" + item + "'");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

constexpr std::string_view kWeightPrefix = "codeword_plus_weight_";
constexpr std::string_view kLowWeightPrefix = "low_weight_";

std::vector<Symbol> random_symbols(Rng& rng, const Field& f, std::size_t n) {
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(uniform_below(rng, f.order()));
  return out;
}

std::vector<Symbol> random_codeword(Rng& rng, const LinearCode& code) {
  const std::vector<Symbol> msg = random_symbols(rng, code.field(), code.dimension());
  return row_times(code.field(), msg, code.generator());
}

// Adds a nonzero offset at `weight` distinct random positions.
void add_error(Rng& rng, const Field& f, std::vector<Symbol>& w, std::size_t weight) {
  std::vector<std::size_t> pool(w.size());
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < weight; ++i) {
    std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
    const auto offset = static_cast<Symbol>(1 + uniform_below(rng, f.order() - 1));
    w[pool[i]] = f.add(w[pool[i]], offset);
  }
}

std::size_t log_uniform_weight(Rng& rng, std::size_t max_weight) {
  max_weight = std::max<std::size_t>(1, max_weight);
  const auto bits = static_cast<std::size_t>(std::bit_width(max_weight));  // >= 1
  const std::size_t b = uniform_below(rng, bits);
  const std::size_t lo = std::size_t{1} << b;
  const std::size_t hi = std::min(max_weight, (std::size_t{1} << (b + 1)) - 1);
  return lo + uniform_below(rng, hi - lo + 1);
}

std::vector<Symbol> base_codeword(Rng& rng, const TestInstance& inst) {
  if (inst.full) return random_codeword(rng, *inst.full);
  return std::vector<Symbol>(inst.graph.left_count(), 0);
}

}  // namespace

std::vector<CorpusItem> parse_corpus_spec(const std::string& text) {
  std::vector<CorpusItem> items;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    const std::string kind = entry.substr(0, colon);
    const bool has_count = colon != std::string::npos;
    const std::size_t count = has_count ? parse_count(entry.substr(colon + 1), entry) : 0;
    if (kind == "mixed") {
      const std::size_t third = count / 3;
      items.push_back({"uniform", third, 0});
      items.push_back({"codeword_plus_random", count - 2 * third, 0});
      items.push_back({"planted_slice", third, 0});
    } else if (kind == "uniform" || kind == "codeword" || kind == "planted_slice" ||
               kind == "codeword_plus_random") {
      if (!has_count) throw Error(ErrorKind::kParse, "corpus item '" + entry + "' needs a count");
      items.push_back({kind, count, 0});
    } else if (kind.starts_with(kWeightPrefix)) {
      if (!has_count) throw Error(ErrorKind::kParse, "corpus item '" + entry + "' needs a count");
      items.push_back({"codeword_plus_weight", count,
                       parse_count(kind.substr(kWeightPrefix.size()), entry)});
    } else if (kind == "exhaustive") {
      items.push_back({kind, 0, 0});
    } else if (kind.starts_with(kLowWeightPrefix)) {
      items.push_back({"low_weight", 0, parse_count(kind.substr(kLowWeightPrefix.size()), entry)});
    } else {
      throw Error(ErrorKind::kParse, "unknown corpus kind '" + kind + "'");
    }
  }
  if (items.empty()) throw Error(ErrorKind::kParse, "empty corpus spec");
  return items;
}

std::vector<CorpusWord> generate_corpus(const TestInstance& inst,
                                        const std::vector<CorpusItem>& items,
                                        std::uint64_t seed) {
  const Field& f = inst.small.field();
  const std::size_t n = inst.graph.left_count();
  const std::uint64_t threshold = limits().enumeration_threshold;
  std::vector<CorpusWord> out;
  for (std::size_t item = 0; item < items.size(); ++item) {
    const CorpusItem& spec = items[item];
    if (spec.kind == "exhaustive") {
      const std::uint64_t count = kernels::checked_message_count(f, n);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        out.push_back({Word(f, kernels::message_from_index(f, n, idx)), spec.kind, item,
                       static_cast<std::size_t>(idx), 0, std::nullopt});
      }
      continue;
    }
    if (spec.kind == "low_weight") {
      // Supports, then every nonzero assignment on each support.
      std::size_t produced = 0;
      for (std::size_t w = 0; w <= std::min(spec.weight, n); ++w) {
        std::vector<std::size_t> pos(w);
        std::iota(pos.begin(), pos.end(), 0);
        while (true) {
          std::vector<Symbol> vals(w, 1);
          while (true) {
            if (out.size() >= threshold) {
              throw Error(ErrorKind::kTooLargeToEnumerate, "low-weight corpus exceeds threshold");
            }
            Word word = Word::zeros(f, n);
            for (std::size_t i = 0; i < w; ++i) word.symbols[pos[i]] = vals[i];
            out.push_back({std::move(word), spec.kind, item, produced++, w, std::nullopt});
            std::size_t i = w;
            while (i > 0 && vals[i - 1] == f.order() - 1) vals[--i] = 1;
            if (i == 0) break;
            ++vals[i - 1];
          }
          std::size_t i = w;
          while (i > 0 && pos[i - 1] == n - w + (i - 1)) --i;
          if (i == 0) break;
          ++pos[i - 1];
          for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
        }
      }
      continue;
    }
    for (std::size_t idx = 0; idx < spec.count; ++idx) {
      Rng rng(derive_seed(seed, item, idx));
      CorpusWord cw{Word::zeros(f, n), spec.kind, item, idx, 0, std::nullopt};
      if (spec.kind == "uniform") {
        cw.word.symbols = random_symbols(rng, f, n);
      } else if (spec.kind == "codeword") {
        cw.word.symbols = base_codeword(rng, inst);
      } else if (spec.kind == "codeword_plus_weight") {
        cw.weight = std::min(spec.weight, n);
        cw.word.symbols = base_codeword(rng, inst);
        add_error(rng, f, cw.word.symbols, cw.weight);
      } else if (spec.kind == "codeword_plus_random") {
        cw.weight = log_uniform_weight(rng, n / 4);
        cw.word.symbols = base_codeword(rng, inst);
        add_error(rng, f, cw.word.symbols, cw.weight);
      } else if (spec.kind == "planted_slice") {
        cw.word.symbols = random_symbols(rng, f, n);
        const std::size_t j = uniform_below(rng, inst.graph.right_count());
        const std::vector<Symbol> planted = random_codeword(rng, inst.small);
        for (std::size_t i = 0; i < inst.graph.degree(); ++i) {
          cw.word.symbols[inst.graph.neighbor(j, i)] = planted[i];
        }
        cw.planted_view = j;
      }
      out.push_back(std::move(cw));
    }
  }
  return out;
}

}  // namespace ltc
