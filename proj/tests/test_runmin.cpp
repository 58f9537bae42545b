// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "chir/oracle.hpp"
#include "chir/runmin.hpp"
#include "test_util.hpp"

namespace chir {
namespace {

TEST(RunminPattern, Examples) {
  EXPECT_EQ(runmin_pattern(2).to_string(), "1010");
  EXPECT_EQ(runmin_pattern(3).to_string(), "10011010");
  EXPECT_EQ(runmin_pattern(4).to_string(), "1001100110011010");
  EXPECT_THROW((void)runmin_pattern(1), contract_error);
}

TEST(RunminLinearizedBwt, Examples) {
  EXPECT_EQ(runmin_linearized_bwt(2).to_string(), "01$010");
  EXPECT_EQ(runmin_linearized_bwt(3).to_string(), "001$0011010");
}

TEST(MakeRunmin, SmallOrders) {
  const BwtOutput c3 = cbwt(make_runmin(3).word);
  EXPECT_EQ(c3.last_column.to_string(), "10011010");
  EXPECT_EQ(c3.runs, 6U);
  const BwtOutput c2 = cbwt(make_runmin(2).word);
  EXPECT_EQ(c2.last_column.to_string(), "1010");
  EXPECT_EQ(c2.runs, 4U);
}

TEST(MakeRunmin, NonPrimitiveTrinomial) {
  EXPECT_THROW((void)make_runmin(5), not_in_family);
  EXPECT_THROW((void)make_runmin(8), not_in_family);
  try {
    (void)make_runmin(5);
  } catch (const not_in_family& e) {
    EXPECT_NE(std::string(e.what()).find("x^5+x+1"), std::string::npos);
  }
}

TEST(VerifyLinearized, OrderThree) {
  const RunMinReport rep = verify_linearized(3);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.rotation.to_string(), "00010111");
  EXPECT_EQ(rep.last_column.to_string(), "001$0011010");
  EXPECT_EQ(rep.r, 8U);
  EXPECT_EQ(rep.chi, 9U);
  EXPECT_EQ(rep.ratio, Rational(9, 8));
}

TEST(VerifyLinearized, OrderTwo) {
  const RunMinReport rep = verify_linearized(2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.last_column.to_string(), "01$010");
  EXPECT_EQ(rep.r, 6U);
  EXPECT_EQ(rep.chi, 5U);
  EXPECT_EQ(rep.ratio, Rational(5, 6));
}

TEST(VerifyLinearized, AgreesWithOraclesOnSmallOrders) {
  for (std::size_t k : {2U, 3U, 4U, 6U}) {
    const RunMinReport rep = verify_linearized(k);
    const SymbolString t = terminate(linearize(CyclicWord(rep.rotation, k), k));
    EXPECT_EQ(rep.last_column.ranks(), oracle::rotation_matrix_last_column(t.ranks())) << k;
    EXPECT_EQ(rep.chi, oracle::brute_force_chi(t)) << k;
    EXPECT_EQ(rep.cbwt_column.ranks(), oracle::rotation_matrix_last_column(rep.cycle.word.ranks())) << k;
  }
}

TEST(VerifyLinearized, EveryPrimitiveOrderUpToFifteen) {
  for (unsigned k : primitive_trinomial_degrees(15)) {
    const RunMinReport rep = verify_linearized(k);
    EXPECT_TRUE(rep.ok()) << k << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.r_c, runmin_expected_rc(k));
    EXPECT_EQ(rep.r, runmin_expected_r(k));
    EXPECT_EQ(rep.chi, runmin_expected_chi(k));
  }
}

TEST(VerifyLinearized, OrderFifteenValues) {
  const RunMinReport rep = verify_linearized(15);
  EXPECT_EQ(rep.r, 16388U);
  EXPECT_EQ(rep.chi, 32769U);
}

TEST(RunminExpectedRatio, IncreasesBelowTwo) {
  for (std::size_t k = 2; k < 30; ++k) {
    EXPECT_LT(runmin_expected_ratio(k), runmin_expected_ratio(k + 1));
    EXPECT_LT(runmin_expected_ratio(k + 1), Rational(2, 1));
  }
}

TEST(FirstMismatch, ReportsIndexAndContext) {
  const SymbolString a = testing::bin("0000000000111");
  const SymbolString b = testing::bin("0000000000101");
  const auto m = first_mismatch(a, b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->index, 11U);
  EXPECT_EQ(m->expected_context, "0000000111");
  EXPECT_EQ(m->actual_context, "0000000101");
  EXPECT_FALSE(first_mismatch(a, a).has_value());
  EXPECT_TRUE(first_mismatch(a, testing::bin("00000000001110")).has_value());
}

}  // namespace
}  // namespace chir
