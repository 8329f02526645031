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

#include "ltc/code.hpp"
#include "ltc/error.hpp"
#include "ltc/matrix.hpp"
#include "oracles.hpp"

namespace {

using namespace ltc;

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

TEST(Code, ReedSolomonGeneratorIsVandermonde) {
  const Field f(7);
  const LinearCode rs = make_reed_solomon(f, 7, 3);
  EXPECT_EQ(rows_of(rs.generator()), oracle::reed_solomon(7, 7, 3));
  EXPECT_EQ(rs.length(), 7u);
  EXPECT_EQ(rs.dimension(), 3u);
  EXPECT_EQ(rs.known_distance(), 5u);
}

TEST(Code, ReedSolomonIsMds) {
  for (std::uint32_t q : {5u, 7u}) {
    const Field f(q);
    for (std::size_t n = 1; n <= q; ++n) {
      for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
        const LinearCode rs = make_reed_solomon(f, n, k);
        const std::size_t d = oracle::min_distance(q, oracle::reed_solomon(q, n, k));
        EXPECT_EQ(d, n - k + 1);
        EXPECT_EQ(min_distance(rs), d) << q << " " << n << " " << k;
      }
    }
  }
  EXPECT_THROW(make_reed_solomon(Field(5), 6, 2), Error);
}

TEST(Code, RepetitionAndFullCodes) {
  const Field f(3);
  const LinearCode rep = make_repetition(f, 4);
  EXPECT_EQ(min_distance(rep), 4u);
  EXPECT_TRUE(is_codeword(rep, Word(f, {2, 2, 2, 2})));
  EXPECT_FALSE(is_codeword(rep, Word(f, {2, 2, 1, 2})));
  const LinearCode full = make_full_code(f, 3);
  EXPECT_EQ(full.dimension(), 3u);
  EXPECT_EQ(min_distance(full), 1u);
}

TEST(Code, MembershipMatchesEnumeration) {
  const Field f(3);
  const oracle::Rows g{{1, 0, 2, 1, 1}, {0, 1, 1, 2, 0}};
  const LinearCode c = make_generator_code(f, g);
  const auto words = oracle::codewords(3, g);
  for (const auto& w : oracle::all_vectors(3, 5)) {
    const bool expected = oracle::distance_to(words, w) == 0;
    EXPECT_EQ(c.contains(w), expected);
    EXPECT_EQ(c.message_of(w).has_value(), expected);
  }
}

TEST(Code, EncodeThenRecoverMessage) {
  const Field f(11);
  const LinearCode rs = make_reed_solomon(f, 9, 3);
  const oracle::Rows g = oracle::reed_solomon(11, 9, 3);
  for (const auto& msg : oracle::all_vectors(11, 3)) {
    const Word w = encode(rs, msg);
    EXPECT_EQ(w.symbols, oracle::combine(11, g, msg));
    EXPECT_EQ(rs.message_of(w.symbols), msg);
  }
}

TEST(Code, ParityCheckAnnihilatesGenerator) {
  const Field f(5);
  const LinearCode rs = make_reed_solomon(f, 5, 2);
  const Matrix h = rs.parity_check();
  EXPECT_EQ(h.rows(), 3u);
  EXPECT_EQ(rank(f, h), 3u);
  const Matrix prod = multiply(f, h, rs.generator().transpose());
  for (Symbol s : prod.data()) EXPECT_EQ(s, 0u);
}

TEST(Code, DependentRowsAreDroppedWithNotice) {
  const Field f(2);
  const LinearCode c = make_generator_code(f, oracle::Rows{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(c.dimension(), 2u);
  ASSERT_TRUE(c.rank_deficiency().has_value());
  EXPECT_EQ(c.rank_deficiency()->supplied_rows, 3u);
  EXPECT_EQ(c.rank_deficiency()->rank, 2u);
  EXPECT_THROW(make_generator_code(f, oracle::Rows{{0, 0}}), Error);
  EXPECT_THROW(make_generator_code(f, oracle::Rows{{0, 2}}), Error);
}

TEST(Code, NearestCodewordMatchesOracle) {
  const Field f(5);
  const LinearCode rs = make_reed_solomon(f, 5, 2);
  const auto words = oracle::codewords(5, oracle::reed_solomon(5, 5, 2));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Vec w(5);
    for (auto& s : w) s = static_cast<std::uint32_t>(rng() % 5);
    const Nearest nc = nearest_codeword(rs, Word(f, w));
    EXPECT_EQ(nc.hamming, oracle::distance_to(words, w));
    EXPECT_EQ(nc.delta, oracle::relative_distance(words, w));
    EXPECT_EQ(hamming_distance(nc.codeword.symbols, w), nc.hamming);
    EXPECT_TRUE(rs.contains(nc.codeword.symbols));
  }
}

TEST(Code, DistanceRequiresSameFieldAndLength) {
  const Field f2(2), f3(3);
  EXPECT_EQ(distance(Word(f2, {0, 1, 1}), Word(f2, {1, 1, 0})).hamming, 2u);
  EXPECT_EQ(distance(Word(f2, {0, 1, 1}), Word(f2, {1, 1, 0})).relative, Rational(2) / 3);
  EXPECT_THROW(distance(Word(f2, {0}), Word(f3, {0})), Error);
  EXPECT_THROW(distance(Word(f2, {0}), Word(f2, {0, 1})), Error);
}

TEST(Code, ProjectionKeepsIndependentColumns) {
  const Field f(7);
  const LinearCode rs = make_reed_solomon(f, 7, 2);
  const std::vector<std::size_t> two{1, 4};
  const LinearCode p = project_code(rs, two);
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_TRUE(projection_is_injective(rs, two));
  const std::vector<std::size_t> one{3};
  EXPECT_FALSE(projection_is_injective(rs, one));
  EXPECT_EQ(project_code(rs, one).dimension(), 1u);
  EXPECT_THROW(project_code(rs, std::vector<std::size_t>{}), Error);
  EXPECT_THROW(project_code(rs, std::vector<std::size_t>{9}), Error);
  EXPECT_THROW(project_code(rs, std::vector<std::size_t>{3, 1}), Error);
}

TEST(Code, EnumerationGuard) {
  const Field f(31);
  const LinearCode big = make_reed_solomon(f, 31, 6);  // 31^6 > 2^24
  EXPECT_THROW(min_distance(big), Error);
}

}  // namespace
