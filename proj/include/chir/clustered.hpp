// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "chir/bwt.hpp"
#include "chir/rational.hpp"
#include "chir/suffixient.hpp"

namespace chir {

/// Block exponents of a clustered word, listed from the largest symbol down:
/// exponents[0] is the length of the s_{σ-1} block, exponents.back() of s_0.
struct ClusteredSpec {
  std::size_t sigma = 0;
  std::vector<std::size_t> exponents;
};

/// Run decomposition of a word: block symbols and block lengths, left to right.
struct Blocks {
  Word symbols;
  std::vector<std::size_t> lengths;
};

inline Blocks run_blocks(const SymbolString& w) {
  Blocks b;
  for (Rank r : w.ranks()) {
    if (!b.symbols.empty() && b.symbols.back() == r) {
      ++b.lengths.back();
    } else {
      b.symbols.push_back(r);
      b.lengths.push_back(1);
    }
  }
  return b;
}

/// s_{σ-1}^{k_{σ-1}} ... s_0^{k_0} over ranks σ-1..0 of `alphabet`
/// (default: Alphabet::ranked(σ)).
inline SymbolString make_clustered(const ClusteredSpec& spec, AlphabetPtr alphabet = nullptr) {
  detail::require(spec.sigma >= 2, "make_clustered: sigma must be at least 2");
  detail::require(spec.exponents.size() == spec.sigma, "make_clustered: need exactly sigma exponents");
  for (std::size_t k : spec.exponents) detail::require(k >= 2, "make_clustered: every exponent must exceed 1");
  if (!alphabet) alphabet = make_alphabet(Alphabet::ranked(spec.sigma));
  detail::require(alphabet->size() >= spec.sigma, "make_clustered: alphabet smaller than sigma");

  Word ranks;
  for (std::size_t b = 0; b < spec.sigma; ++b) {
    const auto symbol = static_cast<Rank>(spec.sigma - 1 - b);
    ranks.insert(ranks.end(), spec.exponents[b], symbol);
  }
  return SymbolString(std::move(alphabet), std::move(ranks), false);
}

/// Checks membership: strictly decreasing block symbols, every block of length >= 2.
inline Blocks clustered_blocks(const SymbolString& k_word) {
  if (k_word.sentinel_count() != 0) throw structure_error("clustered: sentinel in input");
  const Blocks b = run_blocks(k_word);
  if (b.symbols.size() < 2) throw structure_error("clustered: fewer than two blocks");
  for (std::size_t i = 0; i < b.symbols.size(); ++i) {
    if (b.lengths[i] < 2) throw structure_error("clustered: block of length 1");
    if (i > 0 && b.symbols[i] >= b.symbols[i - 1]) throw structure_error("clustered: block symbols not decreasing");
  }
  return b;
}

/// s_0^{k_0} s_1^{k_1} ... s_{σ-1}^{k_{σ-1}} $: the BWT last column of K$.
inline SymbolString clustered_last_column(const SymbolString& k_word) {
  const Blocks b = clustered_blocks(k_word);
  Word ranks;
  for (std::size_t i = b.symbols.size(); i-- > 0;) ranks.insert(ranks.end(), b.lengths[i], b.symbols[i]);
  ranks.push_back(kSentinel);
  return SymbolString(k_word.alphabet_ptr(), std::move(ranks), false);
}

struct ClusteredReport {
  std::size_t sigma = 0;
  std::size_t r = 0;
  std::size_t chi = 0;
  Rational ratio;
  bool runs_ok = false;         // r = σ + 1
  bool chi_ok = false;          // χ = 2σ
  bool last_column_ok = false;  // L = s_0^{k_0} ... s_{σ-1}^{k_{σ-1}} $
  bool ratio_ok = false;        // χ/r = 2σ/(σ+1)

  [[nodiscard]] bool ok() const noexcept { return runs_ok && chi_ok && last_column_ok && ratio_ok; }
};

inline Rational clustered_ratio(std::size_t sigma) {
  return Rational(static_cast<std::int64_t>(2 * sigma), static_cast<std::int64_t>(sigma + 1));
}

inline ClusteredReport verify_clustered(const SymbolString& k_word) {
  const Blocks blocks = clustered_blocks(k_word);
  const SymbolString terminated = terminate(k_word);
  const BwtOutput transform = bwt(terminated);

  ClusteredReport rep;
  rep.sigma = blocks.symbols.size();
  rep.r = transform.runs;
  rep.chi = smallest_suffixient_set(terminated).chi;
  rep.ratio = Rational(static_cast<std::int64_t>(rep.chi), static_cast<std::int64_t>(rep.r));
  rep.runs_ok = rep.r == rep.sigma + 1;
  rep.chi_ok = rep.chi == 2 * rep.sigma;
  rep.last_column_ok = transform.last_column == clustered_last_column(k_word);
  rep.ratio_ok = rep.ratio == clustered_ratio(rep.sigma);
  return rep;
}

/// Exponents drawn uniformly from [lo, hi].
template <class Rng>
ClusteredSpec random_clustered_spec(std::size_t sigma, Rng& rng, std::size_t lo = 2, std::size_t hi = 9) {
  detail::require(lo >= 2 && lo <= hi, "random_clustered_spec: bad exponent range");
  std::uniform_int_distribution<std::size_t> dist(lo, hi);
  ClusteredSpec spec{sigma, {}};
  for (std::size_t i = 0; i < sigma; ++i) spec.exponents.push_back(dist(rng));
  return spec;
}

}  // namespace chir
