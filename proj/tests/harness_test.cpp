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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "ltc/corpus.hpp"
#include "ltc/error.hpp"
#include "ltc/harness.hpp"
#include "ltc/io.hpp"

namespace {

using namespace ltc;
using harness::InstanceRequest;

TEST(Io, CodeSpecs) {
  const LinearCode rs = io::parse_code_spec("rs:q=7,n=7,k=2").build();
  EXPECT_EQ(rs.length(), 7u);
  EXPECT_EQ(rs.dimension(), 2u);
  EXPECT_EQ(io::parse_code_spec("rep:q=2,n=3").build().dimension(), 1u);
  EXPECT_EQ(io::parse_code_spec("full:q=3,n=4").build().dimension(), 4u);
  EXPECT_THROW(io::parse_code_spec("bch:q=2,n=7"), Error);
  EXPECT_THROW(io::parse_code_spec("rs:q=7,n=7"), Error);
  EXPECT_THROW(io::parse_code_spec("rs:q=8,n=7,k=2").build(), Error);
}

TEST(Io, CodeJsonRoundTrip) {
  const LinearCode rs = io::parse_code_spec("rs:q=5,n=5,k=2").build();
  const io::Json j = io::code_to_json(rs);
  const LinearCode back = io::code_spec_from_json(j).build();
  EXPECT_EQ(back.generator(), rs.generator());
  EXPECT_EQ(back.field(), rs.field());
}

TEST(Io, GraphSpecsAndFiles) {
  const io::GraphFamily p = io::parse_graph_spec("product:n=2,m=3");
  EXPECT_EQ(p.kind, "product");
  EXPECT_EQ(p.full_exponent(), 3u);
  EXPECT_EQ(p.small_exponent(), 2u);
  EXPECT_EQ(io::parse_graph_spec("iterated:n=2,m=4,mp=2").small_exponent(), 2u);
  EXPECT_EQ(io::parse_graph_spec("square:n=2,t=2").full_exponent(), 4u);
  EXPECT_THROW(io::parse_graph_spec("torus:n=2"), Error);

  const OrderedGraph g = build_product_graph(2, 2);
  const io::Json j = io::graph_to_json(g);
  EXPECT_EQ(j["lists"][0][0], 1);  // 1-based on disk
  const OrderedGraph back = io::graph_from_json(j);
  for (std::size_t r = 0; r < g.right_count(); ++r) EXPECT_EQ(back.list(r), g.list(r));
  io::Json bad = j;
  bad["lists"][0][0] = 0;
  EXPECT_THROW(io::graph_from_json(bad), Error);
}

TEST(Io, WordsAndLists) {
  const Field f(3);
  EXPECT_EQ(io::parse_symbol_list("0,1,2"), (std::vector<Symbol>{0, 1, 2}));
  EXPECT_EQ(io::parse_index_list("1,3"), (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(io::parse_symbol_list("0,x"), Error);
  const Word w = io::word_from_json(f, io::Json::parse("[1,2,0]"));
  EXPECT_EQ(w.symbols, (std::vector<Symbol>{1, 2, 0}));
  EXPECT_THROW(io::word_from_json(f, io::Json::parse("[3]")), Error);
  const Word tw = io::word_from_json(f, io::Json::parse(R"({"field":3,"shape":[1,2],"symbols":[2,1]})"));
  EXPECT_EQ(tw.symbols, (std::vector<Symbol>{2, 1}));
  EXPECT_THROW(io::word_from_json(f, io::Json::parse(R"({"field":5,"shape":[1],"symbols":[2]})")), Error);
}

TEST(Corpus, SpecParsing) {
  const auto items = parse_corpus_spec("uniform:3,codeword_plus_weight_2:4,exhaustive");
  ASSERT_EQ(items.size(), 3u);
  EXPECT_EQ(items[1].kind, "codeword_plus_weight");
  EXPECT_EQ(items[1].weight, 2u);
  EXPECT_EQ(items[1].count, 4u);
  EXPECT_THROW(parse_corpus_spec("gaussian:3"), Error);
  EXPECT_THROW(parse_corpus_spec("uniform:x"), Error);
}

TEST(Corpus, DeterministicAndWellFormed) {
  const TestInstance inst = make_product_instance(io::parse_code_spec("rs:q=5,n=5,k=2").build(), 2);
  const auto items = parse_corpus_spec("mixed:30,codeword:5,codeword_plus_weight_3:5");
  const auto a = generate_corpus(inst, items, 99);
  const auto b = generate_corpus(inst, items, 99);
  const auto c = generate_corpus(inst, items, 100);
  ASSERT_EQ(a.size(), 40u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].word, b[i].word);
    differs = differs || !(a[i].word == c[i].word);
    EXPECT_EQ(a[i].word.size(), 25u);
  }
  EXPECT_TRUE(differs);
  for (const CorpusWord& w : a) {
    if (w.kind == "codeword") EXPECT_TRUE(inst.full->contains(w.word.symbols));
    if (w.kind == "codeword_plus_weight") {
      EXPECT_LE(nearest_codeword(*inst.full, w.word).hamming, 3u);
    }
  }
}

TEST(Corpus, ExhaustiveAndLowWeight) {
  const TestInstance inst = make_product_instance(io::parse_code_spec("rep:q=2,n=2").build(), 2);
  EXPECT_EQ(generate_corpus(inst, parse_corpus_spec("exhaustive"), 1).size(), 16u);
  // 1 + 4 + 6 words of weight <= 2 over GF(2)^4.
  EXPECT_EQ(generate_corpus(inst, parse_corpus_spec("low_weight_2"), 1).size(), 11u);
  const TestInstance ternary = make_product_instance(io::parse_code_spec("rep:q=3,n=2").build(), 2);
  // 1 + 4*2 + 6*4
  EXPECT_EQ(generate_corpus(ternary, parse_corpus_spec("low_weight_2"), 1).size(), 33u);
}

TEST(Harness, BuildInstanceVariants) {
  const TestInstance a = harness::build_instance({"product:n=3,m=2", "rep:q=2,n=3", std::nullopt});
  ASSERT_TRUE(a.full.has_value());
  EXPECT_EQ(a.full->dimension(), 1u);
  ASSERT_TRUE(a.product.has_value());
  const TestInstance b = harness::build_instance({"product:n=3,m=2", std::nullopt, "rep:q=2,n=3"});
  ASSERT_TRUE(b.full.has_value());
  EXPECT_EQ(b.full->dimension(), 1u);
  const TestInstance c = harness::build_instance({"iterated:n=2,m=4,mp=2", "rep:q=2,n=2", std::nullopt});
  EXPECT_EQ(c.small.length(), 4u);
  EXPECT_EQ(c.full->length(), 16u);
  EXPECT_FALSE(c.product->product_tester);
  EXPECT_THROW(harness::build_instance({"product:n=3,m=2", "rep:q=2,n=4", std::nullopt}), Error);
  EXPECT_THROW(harness::build_instance({"product:n=3,m=2", std::nullopt, std::nullopt}), Error);
}

TEST(Harness, CodewordCorpusIsClean) {
  harness::SweepConfig cfg;
  cfg.instance = {"product:n=5,m=2", "rs:q=5,n=5,k=2", std::nullopt};
  cfg.corpus = "codeword:25";
  const harness::SweepResult r = harness::run_sweep(cfg);
  ASSERT_EQ(r.words.size(), 25u);
  for (const auto& w : r.words) {
    EXPECT_EQ(w.report.rho, 0);
    EXPECT_EQ(w.report.delta.lower, 0);
  }
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.summary.min_ratio.has_value());
}

TEST(Harness, ExhaustiveSweepOnSmallestProduct) {
  harness::SweepConfig cfg;
  cfg.instance = {"product:n=2,m=2", "rep:q=2,n=2", std::nullopt};
  cfg.corpus = "exhaustive";
  const harness::SweepResult r = harness::run_sweep(cfg);
  ASSERT_EQ(r.words.size(), 16u);
  std::size_t zero = 0;
  for (const auto& w : r.words) zero += w.report.rho == 0;
  EXPECT_EQ(zero, 2u);
  EXPECT_TRUE(r.passed());
}

TEST(Harness, SweepJsonIsDeterministic) {
  harness::SweepConfig cfg;
  cfg.instance = {"product:n=3,m=3", "rs:q=3,n=3,k=1", std::nullopt};
  cfg.corpus = "mixed:30";
  cfg.seed = 7;
  const std::string a = harness::sweep_to_json(harness::run_sweep(cfg)).dump(2);
  const std::string b = harness::sweep_to_json(harness::run_sweep(cfg)).dump(2);
  EXPECT_EQ(a, b);
  cfg.seed = 8;
  EXPECT_NE(a, harness::sweep_to_json(harness::run_sweep(cfg)).dump(2));
  const std::string csv = harness::sweep_to_csv(harness::run_sweep(cfg));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 31);
}

TEST(Harness, ViolationsFailTheSweep) {
  harness::SweepConfig cfg;
  cfg.instance = {"product:n=3,m=2", "rep:q=2,n=3", std::nullopt};
  cfg.corpus = "uniform:20";
  cfg.alpha = Rational(2);  // ρ <= δ here, so any word with δ > 0 violates
  const harness::SweepResult r = harness::run_sweep(cfg);
  EXPECT_GT(r.summary.violations, 0u);
  EXPECT_FALSE(r.passed());
}

TEST(Harness, SampledSweepReportsEstimates) {
  harness::SweepConfig cfg;
  cfg.instance = {"product:n=3,m=3", "rs:q=3,n=3,k=1", std::nullopt};
  cfg.corpus = "uniform:5";
  cfg.sampled = true;
  cfg.samples = 16;
  const harness::SweepResult r = harness::run_sweep(cfg);
  ASSERT_EQ(r.words.size(), 5u);
  for (const auto& w : r.words) EXPECT_TRUE(w.estimate.has_value());
  EXPECT_EQ(harness::sweep_to_json(r).dump(), harness::sweep_to_json(harness::run_sweep(cfg)).dump());
}

TEST(Harness, ComposeCheck) {
  harness::ComposeConfig cfg;
  cfg.code = "rep:q=2,n=2";
  cfg.m = 3;
  cfg.corpus = "exhaustive";
  const harness::ComposeResult r = harness::run_compose_check(cfg);
  EXPECT_EQ(r.words.size(), 256u);
  EXPECT_EQ(r.identity_failures, 0u);
  EXPECT_TRUE(r.passed());
  cfg.corpus = "codeword:4";
  for (const auto& w : harness::run_compose_check(cfg).words) {
    EXPECT_EQ(w.composed, 0);
    EXPECT_EQ(w.nested, 0);
  }
}

TEST(Harness, ExpansionCheck) {
  const harness::ExpansionReport r = harness::run_expansion_check({"product:n=2,m=3", true, 0, 1});
  EXPECT_EQ(r.sweep.pairs, 37u * 64u);
  EXPECT_EQ(r.sweep.violations, 0u);
  EXPECT_THROW(harness::run_expansion_check({"product:n=3,m=3", true, 0, 1}), Error);
}

TEST(Harness, QueryAccount) {
  const harness::QueryAccount a = harness::query_account(2, 2, pow2(-32), true);
  EXPECT_EQ(a.queries, 4);
  EXPECT_EQ(a.repetitions, BigInt(1) << 64);
  EXPECT_EQ(a.total, BigInt(1) << 66);
  EXPECT_EQ(a.block_length, BigInt(16));
  EXPECT_EQ(a.built_degree, 4u);
  EXPECT_DOUBLE_EQ(a.log2_total, 66.0);
  for (std::size_t n : {2u, 3u, 5u}) {
    const harness::QueryAccount b = harness::query_account(n, 3, ratio(1, 2));
    EXPECT_EQ(b.queries, BigInt(n * n));
    EXPECT_EQ(b.repetitions, 8);
    EXPECT_NEAR(b.log2_block_length, 8 * std::log2(static_cast<double>(n)), 1e-12);
  }
  EXPECT_EQ(harness::query_account(3, 2, ratio(1, 2), true).built_degree, 9u);
  EXPECT_FALSE(harness::query_account(2, 20, ratio(1, 2)).block_length.has_value());
  EXPECT_THROW(harness::query_account(2, 1, ratio(1, 2)), Error);
  EXPECT_THROW(harness::query_account(2, 2, Rational(0)), Error);
  EXPECT_THROW(harness::query_account(2, 2, Rational(2)), Error);
}

}  // namespace
