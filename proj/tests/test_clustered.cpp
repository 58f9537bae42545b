// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "chir/clustered.hpp"
#include "chir/oracle.hpp"
#include "test_util.hpp"

namespace chir {
namespace {

TEST(MakeClustered, Examples) {
  EXPECT_EQ(make_clustered({3, {2, 4, 3}}, make_alphabet(Alphabet::from_text("123"))).to_string(), "332222111");
  EXPECT_EQ(make_clustered({2, {2, 2}}).to_string(), "1100");
  EXPECT_EQ(make_clustered({3, {2, 2, 2}}).to_string(), "221100");
}

TEST(MakeClustered, BadParameters) {
  EXPECT_THROW((void)make_clustered({2, {2, 1}}), contract_error);
  EXPECT_THROW((void)make_clustered({1, {3}}), contract_error);
  EXPECT_THROW((void)make_clustered({3, {2, 2}}), contract_error);
}

TEST(VerifyClustered, Examples) {
  const ClusteredReport a = verify_clustered(testing::word("332222111"));
  EXPECT_EQ(a.r, 4U);
  EXPECT_EQ(a.chi, 6U);
  EXPECT_EQ(a.ratio, Rational(3, 2));
  EXPECT_TRUE(a.ok());

  const ClusteredReport b = verify_clustered(testing::word("1100"));
  EXPECT_EQ(b.r, 3U);
  EXPECT_EQ(b.chi, 4U);
  EXPECT_EQ(b.ratio, Rational(4, 3));

  const SymbolString c_word = testing::word("221100");
  const ClusteredReport c = verify_clustered(c_word);
  EXPECT_EQ(c.r, count_runs(oracle::rotation_matrix_last_column(terminate(c_word).ranks())));
  EXPECT_EQ(c.chi, oracle::brute_force_chi(terminate(c_word)));
  EXPECT_EQ(c.r, 4U);
  EXPECT_EQ(c.chi, 6U);
}

TEST(VerifyClustered, RejectsWordsOutsideTheFamily) {
  EXPECT_THROW((void)verify_clustered(testing::word("0011")), structure_error);
  EXPECT_THROW((void)verify_clustered(testing::word("1110")), structure_error);
}

TEST(ClusteredBlocks, Screening) {
  EXPECT_NO_THROW((void)clustered_blocks(testing::word("332222111")));
  EXPECT_THROW((void)clustered_blocks(testing::word("3322221")), structure_error);
  EXPECT_THROW((void)clustered_blocks(testing::word("111")), structure_error);
  EXPECT_THROW((void)clustered_blocks(testing::word("22113300")), structure_error);
  EXPECT_THROW((void)clustered_blocks(terminate(testing::word("2211"))), structure_error);
}

TEST(ClusteredLastColumn, IncreasingBlocksThenSentinel) {
  EXPECT_EQ(clustered_last_column(testing::word("332222111")).to_string(), "111222233$");
}

TEST(ClusteredRatio, ClosedForm) {
  EXPECT_EQ(clustered_ratio(2), Rational(4, 3));
  EXPECT_EQ(clustered_ratio(12), Rational(24, 13));
}

TEST(ClusteredRatio, IncreasesTowardTwo) {
  for (std::size_t s = 2; s < 64; ++s) {
    EXPECT_LT(clustered_ratio(s), clustered_ratio(s + 1));
    EXPECT_LT(clustered_ratio(s + 1), Rational(2, 1));
  }
}

TEST(Clustered, RandomSpecsSatisfyClosedForms) {
  std::mt19937_64 rng(41);
  for (std::size_t sigma = 2; sigma <= 12; ++sigma) {
    for (int i = 0; i < 10; ++i) {
      const ClusteredSpec spec = random_clustered_spec(sigma, rng);
      ASSERT_EQ(spec.exponents.size(), sigma);
      const SymbolString k_word = make_clustered(spec);
      const ClusteredReport rep = verify_clustered(k_word);
      ASSERT_TRUE(rep.ok()) << k_word.to_string();
      ASSERT_EQ(rep.chi, oracle::brute_force_chi(terminate(k_word)));
    }
  }
}

}  // namespace
}  // namespace chir
