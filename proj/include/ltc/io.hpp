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

// File formats and the compact spec strings accepted by the CLI.
//
//   code file    {"field": q, "kind": "reed_solomon"|"generator", "n": n,
//                 "k": k, "generator": [[...], ...]}   (generator omitted for RS)
//   word         [s_1, ..., s_n]
//   tensor word  {"field": q, "shape": [n_1, ...], "symbols": [...]}
//   graph file   {"n": N, "m": M, "t": D, "lists": [[...], ...]}  1-based
//
//   code spec    rs:q=7,n=7,k=2 | rep:q=2,n=3 | full:q=2,n=3 | <path.json>
//   graph spec   product:n=2,m=3 | iterated:n=2,m=4,mp=2 | square:n=2,t=2 |
//                <path.json>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltc/code.hpp"
#include "ltc/tanner.hpp"
#include "ltc/tensor.hpp"

namespace ltc::io {

using Json = nlohmann::ordered_json;

struct CodeSpec {
  std::uint32_t q = 2;
  std::string kind;  // "reed_solomon", "generator", "repetition", "full"
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<Symbol>> generator;

  LinearCode build() const;
};

CodeSpec code_spec_from_json(const Json& j);
Json code_spec_to_json(const CodeSpec& spec);
/// Describes any code as a "generator" spec (plus d_known when set).
Json code_to_json(const LinearCode& code);

/// Parses "name:key=value,key=value" into the name and its parameters.
std::pair<std::string, std::map<std::string, std::string>> parse_params(const std::string& text);

/// Compact spec string or path to a code file.
CodeSpec parse_code_spec(const std::string& text);

struct GraphFamily {
  std::string kind;  // "product", "iterated", "square", "file"
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t mp = 0;
  std::size_t t = 0;
  std::string path;

  /// Exponent e of the full code C^e tested by the family.
  std::size_t full_exponent() const;
  /// Exponent of the small code C^e checked on each view.
  std::size_t small_exponent() const;
  std::string describe() const;
};

GraphFamily parse_graph_spec(const std::string& text);
OrderedGraph build_graph(const GraphFamily& family);

OrderedGraph graph_from_json(const Json& j);
Json graph_to_json(const OrderedGraph& g);

Word word_from_json(const Field& field, const Json& j);
Json word_to_json(const Word& w);

TensorWord tensor_word_from_json(const Json& j);
Json tensor_word_to_json(const TensorWord& w);

/// Comma-separated symbols, e.g. "0,1,1".
std::vector<Symbol> parse_symbol_list(const std::string& text);

/// Comma-separated 1-based indices converted to 0-based.
std::vector<std::size_t> parse_index_list(const std::string& text);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Rational as {"p/q"} string.
std::string fraction(const Rational& r);

}  // namespace ltc::io
