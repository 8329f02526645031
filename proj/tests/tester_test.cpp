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

#include <random>

#include "ltc/error.hpp"
#include "ltc/tester.hpp"
#include "oracles.hpp"

namespace {

using namespace ltc;

oracle::Vec random_word(std::mt19937_64& rng, std::size_t n, std::uint32_t q) {
  oracle::Vec w(n);
  for (auto& s : w) s = static_cast<std::uint32_t>(rng() % q);
  return w;
}

TEST(Tester, SingleErrorOnThreeByThree) {
  const Field f(2);
  const TestInstance inst = make_product_instance(make_repetition(f, 3), 2);
  Word w = Word::zeros(f, 9);
  w.symbols[0] = 1;
  // Views: rows 0..2 then columns 0..2; only row 0 and column 0 see the error.
  const ViewCensus census = view_census(inst, w);
  EXPECT_EQ(census.distances, (std::vector<std::size_t>{1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(expected_robustness(census), ratio(1, 9));
  const RobustnessReport r = certify_robustness(inst, w, ratio(1, 2));
  EXPECT_EQ(r.rho, ratio(1, 9));
  EXPECT_TRUE(r.delta.exact);
  EXPECT_EQ(r.delta.lower, ratio(1, 9));
  EXPECT_EQ(r.ratio, Rational(1));
  EXPECT_EQ(r.holds, true);
  EXPECT_EQ(certify_robustness(inst, w, Rational(2)).holds, false);
}

TEST(Tester, RobustnessMatchesOracle) {
  struct Case { std::uint32_t q; std::size_t n, k, m; };
  for (const Case c : {Case{2, 2, 1, 3}, Case{3, 3, 2, 2}, Case{5, 4, 2, 2}}) {
    const Field f(c.q);
    const oracle::Rows base = oracle::reed_solomon(c.q, c.n, c.k);
    const TestInstance inst = make_product_instance(make_generator_code(f, base), c.m);
    const auto lists = oracle::product_lists(c.n, c.m);
    const auto small_words = oracle::codewords(c.q, oracle::kron_power(c.q, base, c.m - 1));
    const auto full_words = oracle::codewords(c.q, oracle::kron_power(c.q, base, c.m));
    std::mt19937_64 rng(c.q * 100 + c.n);
    for (int trial = 0; trial < 40; ++trial) {
      const oracle::Vec w = random_word(rng, inst.graph.left_count(), c.q);
      const Word word(f, w);
      EXPECT_EQ(expected_robustness(inst, word), oracle::robustness(lists, small_words, w));
      const RobustnessReport r = certify_robustness(inst, word, pow2(-16));
      EXPECT_EQ(r.delta.lower, oracle::relative_distance(full_words, w));
      // Uniform coordinate weights: ρ never exceeds δ.
      EXPECT_LE(r.rho, r.delta.lower);
    }
  }
}

TEST(Tester, CodewordsHaveZeroRobustness) {
  const Field f(3);
  const LinearCode base = make_reed_solomon(f, 3, 2);
  const TestInstance inst = make_product_instance(base, 2);
  for (const auto& msg : oracle::all_vectors(3, 4)) {
    const Word w = encode(*inst.full, msg);
    EXPECT_EQ(expected_robustness(inst, w), 0);
    EXPECT_EQ(full_code_delta(inst, w, 0).lower, 0);
  }
}

TEST(Tester, SerialAndParallelCensusAgree) {
  const Field f(5);
  const TestInstance inst = make_product_instance(make_reed_solomon(f, 5, 2), 3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Word w(f, random_word(rng, 125, 5));
    EXPECT_EQ(view_census(inst, w, kernels::Exec::kSerial).distances,
              view_census(inst, w, kernels::Exec::kParallel).distances);
  }
}

TEST(Tester, TauSoundnessError) {
  const Field f(2);
  const TestInstance inst = make_product_instance(make_repetition(f, 3), 2);
  const auto lists = oracle::product_lists(3, 2);
  const auto small_words = oracle::codewords(2, {{1, 1, 1}});
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const oracle::Vec w = random_word(rng, 9, 2);
    for (const Rational& tau : {Rational(0), ratio(1, 3), ratio(1, 2)}) {
      std::size_t above = 0;
      for (const auto& l : lists) above += oracle::relative_distance(small_words, oracle::restrict(w, l)) > tau;
      EXPECT_EQ(tau_soundness_error(inst, Word(f, w), tau), ratio(above, 6));
    }
  }
}

TEST(Tester, AmplifiedRejection) {
  const Field f(2);
  const TestInstance inst = make_product_instance(make_repetition(f, 3), 2);
  Word w = Word::zeros(f, 9);
  w.symbols[4] = 1;
  const Amplification a = amplified_rejection(inst, w, ratio(1, 8));
  EXPECT_EQ(a.repetitions, 8);
  EXPECT_EQ(a.single_reject, ratio(1, 3));
  Rational keep = 1;
  for (int i = 0; i < 8; ++i) keep *= ratio(2, 3);
  EXPECT_EQ(a.reject_prob, 1 - keep);
  EXPECT_EQ(a.holds, true);
  EXPECT_THROW(amplified_rejection(inst, w, Rational(0)), Error);
}

TEST(Tester, CoordinateWeightsOfProductGraphsAreUniform) {
  for (std::size_t n : {2u, 3u}) {
    for (std::size_t m : {2u, 3u}) {
      const CoordinateWeights cw = coordinate_weights(build_product_graph(n, m));
      std::size_t nm = 1;
      for (std::size_t i = 0; i < m; ++i) nm *= n;
      EXPECT_EQ(cw.total, 1);
      for (const Rational& x : cw.weights) EXPECT_EQ(x, ratio(1, static_cast<std::int64_t>(nm)));
    }
  }
  const CoordinateWeights skew = coordinate_weights(make_ordered_graph(3, {{0, 0}, {0, 1}}));
  EXPECT_EQ(skew.total, 1);
  EXPECT_EQ(skew.min_weight, 0);
  EXPECT_EQ(skew.argmin, 2u);
}

TEST(Tester, HypothesisFlags) {
  const HypothesisFlags rs31 = hypotheses(ProductParams{31, 1, 31, 3, true});
  EXPECT_TRUE(rs31.product_tester);
  EXPECT_TRUE(rs31.self_improving);
  const HypothesisFlags rep2 = hypotheses(ProductParams{2, 1, 2, 2, true});
  EXPECT_FALSE(rep2.product_tester);  // (1/2)^2 < 7/8
  EXPECT_TRUE(rep2.self_improving);   // (2/2)^1 = 1
  EXPECT_FALSE(hypotheses(ProductParams{3, 1, 3, 3, true}).product_tester);  // (2/3)^3 < 7/8
  EXPECT_FALSE(hypotheses(ProductParams{3, 2, 2, 2, true}).self_improving);  // 2/3 < 7/8
}

TEST(Tester, SampledEstimateIsSeeded) {
  const Field f(3);
  const TestInstance inst = make_product_instance(make_reed_solomon(f, 3, 1), 3);
  std::mt19937_64 rng(2);
  const Word w(f, random_word(rng, 27, 3));
  const Estimate a = expected_robustness_sampled(inst, w, 42, 500);
  const Estimate b = expected_robustness_sampled(inst, w, 42, 500);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.samples, 500u);
  const Rational exact = expected_robustness(inst, w);
  EXPECT_NEAR(to_double(a.mean), to_double(exact), 6 * a.standard_error + 1e-9);
}

TEST(Tester, CompositionIdentityMatchesOracle) {
  const Field f(2);
  const OrderedGraph g1 = build_product_graph(2, 3);
  const OrderedGraph g2 = build_product_graph(2, 2);
  const OrderedGraph comp = graph_compose(g1, g2);
  const LinearCode c2 = make_repetition(f, 2);
  const auto composed_lists = oracle::compose_lists(oracle::product_lists(2, 3), oracle::product_lists(2, 2));
  const auto c2_words = oracle::codewords(2, {{1, 1}});
  for (const auto& w : oracle::all_vectors(2, 8)) {
    const NestedRobustness nr = composition_identity(g1, g2, comp, c2, Word(f, w));
    EXPECT_EQ(nr.composed, oracle::robustness(composed_lists, c2_words, w));
    EXPECT_EQ(nr.composed, nr.nested);
  }
}

TEST(Tester, BoundChecksOnCleanWords) {
  const ProductParams p{31, 1, 31, 3, true};
  EXPECT_TRUE(check_self_improvement(p, ratio(1, 100), ratio(1, 100)).holds);
  const BoundCheck bad = check_self_improvement(p, ratio(1, 1000), ratio(1, 10));
  EXPECT_TRUE(bad.applicable);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(check_self_improvement(p, 0, ratio(1, 2)).applicable);
}

TEST(Tester, InstanceValidation) {
  const Field f(2);
  EXPECT_THROW(TestInstance(build_product_graph(2, 2), make_repetition(f, 3), std::nullopt, "x"), Error);
  EXPECT_THROW(make_product_instance(make_repetition(f, 2), 1), Error);
}

}  // namespace
