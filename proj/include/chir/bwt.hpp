// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chir/strings.hpp"

namespace chir {

/// Last column of a sorted rotation matrix, with the sort order that produced it.
struct BwtOutput {
  SymbolString last_column;
  std::size_t runs = 0;
  std::vector<std::size_t> sort_perm;
};

/// Number of maximal equal-letter blocks.
inline std::size_t count_runs(std::span<const Rank> column) {
  detail::require(!column.empty(), "count_runs: empty input");
  std::size_t runs = 1;
  for (std::size_t i = 1; i < column.size(); ++i)
    if (column[i] != column[i - 1]) ++runs;
  return runs;
}

inline std::size_t count_runs(const SymbolString& column) { return count_runs(column.ranks()); }

namespace detail {

inline BwtOutput last_column_of(const AlphabetPtr& alphabet, const Word& text, std::vector<std::size_t> perm) {
  const std::size_t n = text.size();
  Word last(n);
  for (std::size_t i = 0; i < n; ++i) last[i] = text[(perm[i] + n - 1) % n];
  BwtOutput out{SymbolString(alphabet, std::move(last), false), 0, std::move(perm)};
  out.runs = count_runs(out.last_column);
  return out;
}

}  // namespace detail

/// BWT of a terminated string via its suffix array.
inline BwtOutput bwt(const SymbolString& w) {
  detail::require(w.terminated(), "bwt: input must be terminated (use cbwt for cyclic words)");
  return detail::last_column_of(w.alphabet_ptr(), w.ranks(), suffix_array(w));
}

/// Circular BWT: last column of the sorted rotations, ties by ascending cut.
inline BwtOutput cbwt(const CyclicWord& c) {
  detail::require(c.size() > 0, "cbwt: empty word");
  return detail::last_column_of(c.alphabet_ptr(), c.ranks(), sort_rotations(c.ranks()));
}

/// Result of inverting a candidate BWT column. `text` is set iff the LF
/// mapping is a single cycle.
struct Inversion {
  std::optional<SymbolString> text;
  std::size_t cycles = 0;

  [[nodiscard]] bool valid() const noexcept { return text.has_value(); }
};

/// LF mapping of a column holding exactly one sentinel.
inline std::vector<std::size_t> lf_mapping(const SymbolString& column) {
  detail::require(column.sentinel_count() == 1, "lf_mapping: column needs exactly one sentinel");
  const auto& L = column.ranks();
  const std::size_t n = L.size();
  std::vector<std::size_t> start(column.sigma() + 2, 0);
  for (Rank r : L) ++start[static_cast<std::size_t>(r + 1) + 1];
  for (std::size_t b = 1; b < start.size(); ++b) start[b] += start[b - 1];
  std::vector<std::size_t> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = start[static_cast<std::size_t>(L[i] + 1)]++;
  return lf;
}

inline Inversion invert_bwt(const SymbolString& column) {
  const auto lf = lf_mapping(column);
  const std::size_t n = lf.size();

  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = lf[j]) seen[j] = true;
  }
  if (cycles != 1) return Inversion{std::nullopt, cycles};

  // row 0 is the rotation starting with the sentinel; walk LF backwards through the text
  const auto& L = column.ranks();
  Word text(n);
  text[n - 1] = kSentinel;
  std::size_t row = 0;
  for (std::size_t j = n - 1; j-- > 0;) {
    text[j] = L[row];
    row = lf[row];
  }
  return Inversion{SymbolString(column.alphabet_ptr(), std::move(text), true), 1};
}

/// r, r̄ and r_c of an unterminated word.
struct RunMeasures {
  std::size_t r = 0;
  std::size_t r_bar = 0;
  std::size_t r_c = 0;

  friend bool operator==(const RunMeasures&, const RunMeasures&) = default;
};

inline RunMeasures r_measures(const SymbolString& w) {
  detail::require(!w.empty() && w.sentinel_count() == 0, "r_measures: non-empty unterminated word required");
  return RunMeasures{
      bwt(terminate(w)).runs,
      bwt(terminate(reverse(w))).runs,
      cbwt(CyclicWord(w)).runs,
  };
}

}  // namespace chir
