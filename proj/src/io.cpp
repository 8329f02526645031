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

#include "ltc/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

namespace ltc::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::kParse, what); }

std::size_t to_size(const std::string& text, const std::string& key) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    parse_error("parameter " + key + "=" + text + " is not a nonnegative integer");
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::exception&) {
    parse_error("parameter " + key + "=" + text + " is out of range");
  }
}

std::size_t require(const std::map<std::string, std::string>& params, const std::string& key,
                    const std::string& spec) {
  auto it = params.find(key);
  if (it == params.end()) parse_error("spec '" + spec + "' is missing " + key + "=");
  return to_size(it->second, key);
}

bool looks_like_path(const std::string& text) {
  return text.find(':') == std::string::npos || text.ends_with(".json") ||
         std::filesystem::exists(text);
}

template <class T>
T json_get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string fraction(const Rational& r) { return to_fraction_string(r); }

LinearCode CodeSpec::build() const {
  const Field field(q);
  if (kind == "reed_solomon") return make_reed_solomon(field, n, k);
  if (kind == "repetition") return make_repetition(field, n);
  if (kind == "full") return make_full_code(field, n);
  if (kind == "generator") {
    LinearCode code = make_generator_code(field, generator);
    if (n != 0 && code.length() != n) {
      throw Error(ErrorKind::kShapeMismatch,
                  "generator rows have length " + std::to_string(code.length()) +
                      " but n = " + std::to_string(n));
    }
    return code;
  }
  parse_error("unknown code kind '" + kind + "'");
}

CodeSpec code_spec_from_json(const Json& j) {
  CodeSpec spec;
  spec.q = json_get<std::uint32_t>(j, "field");
  spec.kind = json_get<std::string>(j, "kind");
  if (spec.kind == "generator") {
    spec.generator = json_get<std::vector<std::vector<Symbol>>>(j, "generator");
    spec.n = j.contains("n") ? json_get<std::size_t>(j, "n")
                             : (spec.generator.empty() ? 0 : spec.generator.front().size());
    spec.k = j.contains("k") ? json_get<std::size_t>(j, "k") : spec.generator.size();
  } else {
    spec.n = json_get<std::size_t>(j, "n");
    spec.k = spec.kind == "reed_solomon" ? json_get<std::size_t>(j, "k")
                                         : (j.contains("k") ? json_get<std::size_t>(j, "k") : 0);
  }
  return spec;
}

Json code_spec_to_json(const CodeSpec& spec) {
  Json j;
  j["field"] = spec.q;
  j["kind"] = spec.kind;
  j["n"] = spec.n;
  j["k"] = spec.k;
  if (spec.kind == "generator") j["generator"] = spec.generator;
  return j;
}

Json code_to_json(const LinearCode& code) {
  Json j;
  j["field"] = code.field().order();
  j["kind"] = "generator";
  j["n"] = code.length();
  j["k"] = code.dimension();
  std::vector<std::vector<Symbol>> rows;
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    auto row = code.generator().row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  j["generator"] = rows;
  if (code.known_distance()) j["d_known"] = *code.known_distance();
  return j;
}

std::pair<std::string, std::map<std::string, std::string>> parse_params(const std::string& text) {
  const auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon == std::string::npos) return {name, params};
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) parse_error("expected key=value in '" + text + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return {name, params};
}

CodeSpec parse_code_spec(const std::string& text) {
  if (text.starts_with("file:")) return code_spec_from_json(read_json_file(text.substr(5)));
  if (looks_like_path(text)) return code_spec_from_json(read_json_file(text));
  const auto [name, params] = parse_params(text);
  CodeSpec spec;
  spec.q = static_cast<std::uint32_t>(require(params, "q", text));
  spec.n = require(params, "n", text);
  if (name == "rs" || name == "reed_solomon") {
    spec.kind = "reed_solomon";
    spec.k = require(params, "k", text);
  } else if (name == "rep" || name == "repetition") {
    spec.kind = "repetition";
    spec.k = 1;
  } else if (name == "full") {
    spec.kind = "full";
    spec.k = spec.n;
  } else {
    parse_error("unknown code family '" + name + "' (expected rs, rep, full or a JSON path)");
  }
  return spec;
}

std::size_t GraphFamily::full_exponent() const {
  if (kind == "product" || kind == "iterated") return m;
  if (kind == "square") return std::size_t{1} << t;
  return 0;
}

std::size_t GraphFamily::small_exponent() const {
  if (kind == "product") return m - 1;
  if (kind == "iterated") return mp;
  if (kind == "square") return 2;
  return 0;
}

std::string GraphFamily::describe() const {
  if (kind == "product") return "product:n=" + std::to_string(n) + ",m=" + std::to_string(m);
  if (kind == "iterated") {
    return "iterated:n=" + std::to_string(n) + ",m=" + std::to_string(m) +
           ",mp=" + std::to_string(mp);
  }
  if (kind == "square") return "square:n=" + std::to_string(n) + ",t=" + std::to_string(t);
  return path;
}

GraphFamily parse_graph_spec(const std::string& text) {
  GraphFamily f;
  if (text.starts_with("file:") || looks_like_path(text)) {
    f.kind = "file";
    f.path = text.starts_with("file:") ? text.substr(5) : text;
    return f;
  }
  const auto [name, params] = parse_params(text);
  f.kind = name;
  f.n = require(params, "n", text);
  if (name == "product") {
    f.m = require(params, "m", text);
  } else if (name == "iterated") {
    f.m = require(params, "m", text);
    f.mp = require(params, "mp", text);
  } else if (name == "square") {
    f.t = require(params, "t", text);
  } else {
    parse_error("unknown graph family '" + name + "' (expected product, iterated, square)");
  }
  return f;
}

OrderedGraph build_graph(const GraphFamily& family) {
  if (family.kind == "product") return build_product_graph(family.n, family.m);
  if (family.kind == "iterated") return build_iterated_graph(family.n, family.m, family.mp);
  if (family.kind == "square") return build_square_test_graph(family.n, family.t);
  return graph_from_json(read_json_file(family.path));
}

OrderedGraph graph_from_json(const Json& j) {
  const auto n = json_get<std::size_t>(j, "n");
  auto lists = json_get<std::vector<std::vector<std::size_t>>>(j, "lists");
  for (auto& list : lists) {
    for (auto& v : list) {
      if (v == 0) throw Error(ErrorKind::kEntryOutOfRange, "graph file entries are 1-based");
      --v;
    }
  }
  OrderedGraph g = make_ordered_graph(n, lists, "file");
  if (j.contains("m") && json_get<std::size_t>(j, "m") != g.right_count()) {
    parse_error("graph file: m does not match the number of lists");
  }
  if (j.contains("t") && json_get<std::size_t>(j, "t") != g.degree()) {
    throw Error(ErrorKind::kRaggedLists, "graph file: t does not match the list length");
  }
  return g;
}

Json graph_to_json(const OrderedGraph& g) {
  const OrderedGraph e = g.materialized();
  Json j;
  j["n"] = e.left_count();
  j["m"] = e.right_count();
  j["t"] = e.degree();
  Json lists = Json::array();
  for (std::size_t r = 0; r < e.right_count(); ++r) {
    Json list = Json::array();
    for (std::size_t i = 0; i < e.degree(); ++i) list.push_back(e.neighbor(r, i) + 1);
    lists.push_back(std::move(list));
  }
  j["lists"] = std::move(lists);
  return j;
}

Word word_from_json(const Field& field, const Json& j) {
  std::vector<Symbol> symbols;
  if (j.is_object()) {
    const TensorWord tw = tensor_word_from_json(j);
    require_same_field(field, tw.field());
    symbols.assign(tw.symbols().begin(), tw.symbols().end());
  } else if (j.is_array()) {
    try {
      symbols = j.get<std::vector<Symbol>>();
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("word: ") + e.what());
    }
  } else {
    parse_error("word must be a JSON array or tensor-word object");
  }
  field.check_symbols(symbols, "word");
  return {field, std::move(symbols)};
}

Json word_to_json(const Word& w) { return Json(w.symbols); }

TensorWord tensor_word_from_json(const Json& j) {
  const Field field(json_get<std::uint32_t>(j, "field"));
  return TensorWord(field, json_get<std::vector<std::size_t>>(j, "shape"),
                    json_get<std::vector<Symbol>>(j, "symbols"));
}

Json tensor_word_to_json(const TensorWord& w) {
  Json j;
  j["field"] = w.field().order();
  j["shape"] = w.shape();
  j["symbols"] = std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
  return j;
}

std::vector<Symbol> parse_symbol_list(const std::string& text) {
  std::vector<Symbol> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) parse_error("empty entry in symbol list '" + text + "'");
    const std::size_t v = to_size(item, "symbol");
    if (v > UINT32_MAX) parse_error("symbol out of range");
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (Symbol v : parse_symbol_list(text)) {
    if (v == 0) parse_error("indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace ltc::io
