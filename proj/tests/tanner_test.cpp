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

#include "ltc/config.hpp"
#include "ltc/error.hpp"
#include "ltc/tanner.hpp"
#include "ltc/tensor.hpp"
#include "oracles.hpp"

namespace {

using namespace ltc;

std::vector<std::vector<std::size_t>> lists_of(const OrderedGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < g.right_count(); ++j) out.push_back(g.list(j));
  return out;
}

TEST(Tanner, ProductGraphMatchesDefinition) {
  for (std::size_t n : {2u, 3u}) {
    for (std::size_t m : {2u, 3u, 4u}) {
      const OrderedGraph g = build_product_graph(n, m);
      EXPECT_EQ(lists_of(g), oracle::product_lists(n, m));
      std::size_t nm1 = 1;
      for (std::size_t i = 1; i < m; ++i) nm1 *= n;
      EXPECT_EQ(g.degree(), nm1);
      EXPECT_EQ(g.right_count(), n * m);
      for (std::size_t deg : g.left_degrees()) EXPECT_EQ(deg, m);
    }
  }
}

TEST(Tanner, CompositionMatchesDefinition) {
  const OrderedGraph g1 = build_product_graph(2, 4);
  const OrderedGraph g2 = build_product_graph(2, 3);
  const OrderedGraph c = graph_compose(g1, g2);
  EXPECT_EQ(lists_of(c), oracle::compose_lists(oracle::product_lists(2, 4), oracle::product_lists(2, 3)));
  EXPECT_THROW(graph_compose(g1, build_product_graph(3, 2)), Error);
}

TEST(Tanner, ComputedAdjacencyMatchesExplicit) {
  Limits tight = limits();
  tight.adjacency_budget = 4;
  const OrderedGraph explicit_g = graph_compose(build_product_graph(2, 4), build_product_graph(2, 3));
  OrderedGraph computed = explicit_g;
  {
    ScopedLimits guard(tight);
    computed = graph_compose(build_product_graph(2, 4), build_product_graph(2, 3));
    EXPECT_FALSE(computed.is_explicit());
  }
  EXPECT_EQ(lists_of(computed), lists_of(explicit_g));
}

TEST(Tanner, FamilySizes) {
  const OrderedGraph g42 = build_iterated_graph(2, 4, 2);
  EXPECT_EQ(g42.left_count(), 16u);
  EXPECT_EQ(g42.degree(), 4u);
  EXPECT_EQ(g42.right_count(), 8u * 6u);
  const OrderedGraph h2 = build_square_test_graph(2, 2);
  EXPECT_EQ(lists_of(h2), lists_of(g42));
  const OrderedGraph h3 = build_square_test_graph(2, 3);
  EXPECT_EQ(h3.left_count(), 256u);
  EXPECT_EQ(h3.degree(), 4u);
  EXPECT_EQ(h3.right_count(), 9216u);
  EXPECT_EQ(square_test_left_count(3, 3), 6561u);
  EXPECT_EQ(build_square_test_graph(3, 2).degree(), 9u);
}

TEST(Tanner, ExplicitGraphValidation) {
  EXPECT_THROW(make_ordered_graph(3, {}), Error);
  EXPECT_THROW(make_ordered_graph(3, {{0, 1}, {2}}), Error);
  EXPECT_THROW(make_ordered_graph(3, {{0, 3}}), Error);
  const OrderedGraph g = make_ordered_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.neighbor(1, 1), 2u);
  EXPECT_THROW(TannerCode(g, make_repetition(Field(2), 3)), Error);
}

TEST(Tanner, TpcOfProductGraphIsTensorCode) {
  const Field f(2);
  const oracle::Rows base{{1, 1}};
  const LinearCode c = make_repetition(f, 2);
  const TannerCode tpc(build_product_graph(2, 3), tensor_power(c, 2).as_linear_code());
  const auto tensor_words = oracle::codewords(2, oracle::kron_power(2, base, 3));
  for (const auto& w : oracle::all_vectors(2, 8)) {
    EXPECT_EQ(tpc_membership(tpc, Word(f, w)), oracle::distance_to(tensor_words, w) == 0);
  }
  const LinearCode as_code = tpc_as_linear_code(tpc);
  EXPECT_EQ(as_code.dimension(), 1u);
  EXPECT_EQ(min_distance(as_code), 8u);
}

TEST(Tanner, TpcMembershipAgreesWithOracleOnRandomGraph) {
  const Field f(3);
  std::mt19937_64 rng(17);
  std::vector<std::vector<std::size_t>> lists(5, std::vector<std::size_t>(3));
  for (auto& l : lists) {
    for (auto& v : l) v = rng() % 6;
  }
  const OrderedGraph g = make_ordered_graph(6, lists);
  const oracle::Rows small_rows{{1, 2, 0}, {0, 1, 1}};
  const TannerCode tpc(g, make_generator_code(f, small_rows));
  const auto small_words = oracle::codewords(3, small_rows);
  const LinearCode explicit_code = tpc_as_linear_code(tpc);
  for (const auto& w : oracle::all_vectors(3, 6)) {
    const bool expected = oracle::tpc_member(lists, small_words, w);
    EXPECT_EQ(tpc_membership(tpc, Word(f, w)), expected);
    EXPECT_EQ(explicit_code.contains(w), expected);
  }
}

TEST(Tanner, ExpansionCountsBoundaryEdges) {
  const OrderedGraph g = build_product_graph(2, 3);
  const std::vector<std::size_t> none;
  const ExpansionResult empty = check_expansion(g, none, none);
  EXPECT_EQ(empty.gamma, 0u);
  EXPECT_EQ(empty.slack, 0);
  EXPECT_TRUE(empty.holds);
  // S = {0}: point (0,0,0) lies on right vertices 0, 2, 4.
  const std::vector<std::size_t> s{0}, t{0};
  const ExpansionResult r = check_expansion(g, s, none);
  EXPECT_EQ(r.gamma, 3u);
  EXPECT_EQ(r.bound, ratio(3, 8));
  // Adding right vertex 0 makes its edge to point 0 internal; 3 other edges leave it.
  EXPECT_EQ(check_expansion(g, s, t).gamma, 2u + 3u);
  const std::vector<std::size_t> too_many{0, 1, 2};
  EXPECT_THROW(check_expansion(g, too_many, none), Error);
}

TEST(Tanner, ExpansionExhaustiveMatchesBruteForce) {
  const OrderedGraph g = build_product_graph(2, 3);
  const auto lists = oracle::product_lists(2, 3);
  std::uint64_t pairs = 0, violations = 0;
  for (std::size_t smask = 0; smask < 256; ++smask) {
    if (__builtin_popcountll(smask) > 2) continue;
    for (std::size_t tmask = 0; tmask < 64; ++tmask) {
      ++pairs;
      std::uint64_t gamma = 0;
      for (std::size_t j = 0; j < 6; ++j) {
        for (std::size_t v : lists[j]) gamma += ((smask >> v) & 1) != ((tmask >> j) & 1);
      }
      const std::uint64_t bound8 = 3 * __builtin_popcountll(smask) + 4 * __builtin_popcountll(tmask);
      violations += 8 * gamma < bound8;
    }
  }
  const ExpansionSweep sweep = expansion_exhaustive(g);
  EXPECT_EQ(sweep.pairs, pairs);
  EXPECT_EQ(sweep.pairs, 37u * 64u);
  EXPECT_EQ(sweep.violations, violations);
}

}  // namespace
