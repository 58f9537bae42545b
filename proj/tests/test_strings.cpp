// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chir/oracle.hpp"
#include "chir/strings.hpp"
#include "test_util.hpp"

namespace chir {
namespace {

using testing::bin;
using testing::bincyc;
using testing::cyc;
using testing::word;

TEST(Alphabet, SortedDistinctBytes) {
  const Alphabet a = Alphabet::from_text("banana");
  ASSERT_EQ(a.size(), 3U);
  EXPECT_EQ(a.label(0), 'a');
  EXPECT_EQ(a.label(2), 'n');
  EXPECT_EQ(a.rank_of('b'), 1);
  EXPECT_FALSE(a.rank_of('z').has_value());
}

TEST(Alphabet, SentinelByteIsReserved) {
  EXPECT_THROW(Alphabet::from_text("a$b"), contract_error);
  EXPECT_THROW(Alphabet({'$'}), contract_error);
}

TEST(Alphabet, RejectsUnsortedOrEmpty) {
  EXPECT_THROW(Alphabet({'b', 'a'}), contract_error);
  EXPECT_THROW(Alphabet(std::vector<unsigned char>{}), contract_error);
}

TEST(Alphabet, NamedDeclarations) {
  EXPECT_EQ(Alphabet::named("binary", "").size(), 2U);
  EXPECT_EQ(Alphabet::named("digits", "").size(), 10U);
  EXPECT_EQ(Alphabet::named("sorted", "cab").label(0), 'a');
  EXPECT_FALSE(Alphabet::named("bytes", "").rank_of('$').has_value());
  EXPECT_THROW(Alphabet::named("klingon", "x"), contract_error);
}

TEST(Alphabet, DeclaredOrderPinsRanks) {
  const SymbolString w = SymbolString::parse("1", make_alphabet(Alphabet::digits()));
  EXPECT_EQ(w[0], 1);
  EXPECT_EQ(w.sigma(), 10U);
}

TEST(SymbolString, ParseRejectsForeignSymbols) {
  EXPECT_THROW(SymbolString::parse("012", make_alphabet(Alphabet::binary())), contract_error);
}

TEST(SymbolString, ToStringRendersSentinel) { EXPECT_EQ(terminate(word("aabaa")).to_string(), "aabaa$"); }

TEST(Rotate, Examples) {
  EXPECT_EQ(rotate(bincyc("00010111"), 0).to_string(), "00010111");
  EXPECT_EQ(rotate(bincyc("00010111"), 3).to_string(), "10111000");
  EXPECT_EQ(rotate(cyc("aabaa"), 2).to_string(), "baaaa");
}

TEST(Rotate, CutOutOfRange) { EXPECT_THROW((void)rotate(bincyc("0101"), 4), std::out_of_range); }

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(bin("00010111")).to_string(), "11101000");
  EXPECT_TRUE(reverse(bin("")).empty());
  EXPECT_EQ(reverse(word("aabaa")).to_string(), "aabaa");
}

TEST(Reverse, TerminatedInputIsRejected) { EXPECT_THROW((void)reverse(terminate(word("ab"))), contract_error); }

TEST(Complement, Examples) {
  EXPECT_EQ(complement(bin("11101000")).to_string(), "00010111");
  EXPECT_EQ(complement(bin("0")).to_string(), "1");
}

TEST(Complement, NonBinaryAlphabet) { EXPECT_THROW((void)complement(word("abc")), unsupported_alphabet); }

TEST(Complement, Involution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const SymbolString x = testing::random_word(rng, 2, 1 + i % 40);
    EXPECT_EQ(complement(complement(x)), x);
  }
}

TEST(Linearize, Examples) {
  EXPECT_EQ(linearize(bincyc("00010111"), 3).to_string(), "0001011100");
  EXPECT_EQ(linearize(bincyc("0011"), 2).to_string(), "00110");
  EXPECT_EQ(linearize(bincyc("1010"), 2).to_string(), "10101");
}

TEST(Linearize, OrderBelowTwo) { EXPECT_THROW((void)linearize(bincyc("0011"), 1), contract_error); }

TEST(Terminate, Examples) {
  EXPECT_EQ(terminate(bin("00010111")).to_string(), "00010111$");
  const SymbolString empty = terminate(bin(""));
  EXPECT_EQ(empty.to_string(), "$");
  EXPECT_EQ(empty.sentinel_count(), 1U);
}

TEST(Terminate, Twice) { EXPECT_THROW((void)terminate(terminate(word("a"))), contract_error); }

TEST(SuffixArray, Examples) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(suffix_array(terminate(word("a"))), (V{1, 0}));
  EXPECT_EQ(suffix_array(terminate(word("aabaa"))), (V{5, 4, 3, 0, 1, 2}));
  EXPECT_EQ(suffix_array(terminate(word("banana"))), (V{6, 5, 3, 1, 0, 4, 2}));
}

TEST(SuffixArray, MatchesNaiveSortOnRandomStrings) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t sigma = 2 + i % 3;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    const SymbolString t = terminate(testing::random_word(rng, sigma, n));
    ASSERT_EQ(suffix_array(t), oracle::naive_suffix_array(t.ranks())) << t.to_string();
  }
}

TEST(LcpArray, Examples) {
  using V = std::vector<std::size_t>;
  for (auto [text, expected] : {std::pair<const char*, V>{"a", {0, 0}},
                                {"aabaa", {0, 0, 1, 2, 1, 0}},
                                {"banana", {0, 0, 1, 3, 0, 0, 2}}}) {
    const SymbolString t = terminate(word(text));
    EXPECT_EQ(lcp_array(t, suffix_array(t)), expected) << text;
  }
}

TEST(LcpArray, MatchesPairwiseComparison) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const SymbolString t = terminate(testing::random_word(rng, 2 + i % 3, 1 + i % 60));
    const auto sa = suffix_array(t);
    const auto lcp = lcp_array(t, sa);
    for (std::size_t j = 1; j < sa.size(); ++j) {
      std::size_t l = 0;
      while (sa[j - 1] + l < t.size() && sa[j] + l < t.size() && t[sa[j - 1] + l] == t[sa[j] + l]) ++l;
      ASSERT_EQ(lcp[j], l);
    }
  }
}

TEST(LcpArray, MismatchedInputs) {
  const SymbolString t = terminate(word("abc"));
  const std::vector<std::size_t> short_sa{0, 1};
  EXPECT_THROW((void)lcp_array(t, short_sa), contract_error);
}

TEST(SortRotations, PeriodicTiesByIndex) {
  const SymbolString w = word("abab");
  EXPECT_EQ(sort_rotations(w.ranks()), (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(LeastRotation, MatchesBruteForce) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const CyclicWord c(testing::random_word(rng, 2 + i % 2, 1 + i % 30));
    SymbolString best = rotate(c, 0);
    for (std::size_t cut = 1; cut < c.size(); ++cut) {
      SymbolString r = rotate(c, cut);
      if (r.ranks() < best.ranks()) best = r;
    }
    EXPECT_EQ(least_rotation(c), best);
  }
}

TEST(EqualUpToRotation, Basic) {
  EXPECT_TRUE(equal_up_to_rotation(bincyc("00010111"), bincyc("10111000")));
  EXPECT_FALSE(equal_up_to_rotation(bincyc("00010111"), bincyc("00011101")));
  EXPECT_FALSE(equal_up_to_rotation(bincyc("0001"), bincyc("00010")));
}

}  // namespace
}  // namespace chir
