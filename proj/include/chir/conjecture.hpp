// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chir/bwt.hpp"
#include "chir/debruijn.hpp"
#include "chir/gf2.hpp"
#include "chir/runmin.hpp"

namespace chir {

/// Sentinel insertion points of `base` whose column inverts to a text.
struct DollarScan {
  SymbolString base;
  std::vector<std::size_t> valid_positions;
  std::vector<SymbolString> recovered;  // one per valid position
};

/// `base` with a sentinel inserted before index `pos`.
inline SymbolString insert_sentinel(const SymbolString& base, std::size_t pos) {
  detail::require(pos <= base.size(), "insert_sentinel: position out of range");
  Word ranks(base.ranks());
  ranks.insert(ranks.begin() + static_cast<std::ptrdiff_t>(pos), kSentinel);
  return SymbolString(base.alphabet_ptr(), std::move(ranks), false);
}

/// Tries every insertion point and keeps those whose LF mapping is a single
/// cycle. Work is split over `threads` workers; results are position-ordered.
inline DollarScan dollar_positions(const SymbolString& base, unsigned threads = 1) {
  detail::require(base.sentinel_count() == 0, "dollar_positions: base already holds a sentinel");
  const std::size_t slots = base.size() + 1;
  std::vector<std::optional<SymbolString>> found(slots);

  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      Inversion inv = invert_bwt(insert_sentinel(base, i));
      if (inv.valid()) found[i] = std::move(inv.text);
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(slots)));
  if (threads == 1) {
    work(0, slots);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (slots + threads - 1) / threads;
    for (std::size_t from = 0; from < slots; from += chunk) pool.emplace_back(work, from, std::min(slots, from + chunk));
    for (auto& t : pool) t.join();
  }

  DollarScan scan{base, {}, {}};
  for (std::size_t i = 0; i < slots; ++i) {
    if (!found[i]) continue;
    scan.valid_positions.push_back(i);
    scan.recovered.push_back(std::move(*found[i]));
  }
  return scan;
}

inline constexpr std::size_t kEnumerationCap = 5;

/// 2^{2^{k-1} - k}, the number of binary de Bruijn cycles of order k.
inline std::size_t debruijn_cycle_count(std::size_t k) { return std::size_t{1} << ((std::size_t{1} << (k - 1)) - k); }

/// Every binary de Bruijn cycle of order k, each as its rotation starting
/// with 0^k, in lexicographic order. Backtracks over the order-k de Bruijn
/// graph, closing the cycle through the leading zeros.
inline std::vector<DeBruijnCycle> enumerate_debruijn(std::size_t k, std::size_t cap = kEnumerationCap) {
  detail::require(k >= 1, "enumerate_debruijn: order must be at least 1");
  if (k > cap) throw budget_exceeded("enumerate_debruijn: order above the enumeration cap");
  const std::size_t n = std::size_t{1} << k;
  const std::size_t mask = n - 1;

  std::vector<DeBruijnCycle> out;
  Word seq(n + k - 1, 0);
  std::vector<bool> used(n, false);
  used[0] = true;

  // seq[0..pos) fixed; `window` is the value of the last k bits ending at pos-1
  auto extend = [&](auto& self, std::size_t pos, std::size_t window) -> void {
    if (pos == n + k - 1) {
      Word cycle(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n));
      out.push_back(DeBruijnCycle::from(CyclicWord(detail::binary_alphabet(), std::move(cycle), k), k));
      return;
    }
    for (Rank b = 0; b <= 1; ++b) {
      if (pos >= n && b != seq[pos - n]) continue;
      const std::size_t next = ((window << 1) | static_cast<std::size_t>(b)) & mask;
      if (used[next]) continue;
      used[next] = true;
      seq[pos] = b;
      self(self, pos + 1, next);
      used[next] = false;
    }
  };
  extend(extend, k, 0);
  return out;
}

/// Cycles among `enumerate_debruijn(k)` whose cBWT is the run-minimal pattern.
inline std::vector<DeBruijnCycle> runmin_achievers(std::size_t k, std::size_t cap = kEnumerationCap) {
  const SymbolString pattern = runmin_pattern(k);
  std::vector<DeBruijnCycle> out;
  for (auto& c : enumerate_debruijn(k, cap))
    if (cbwt(c.word).last_column == pattern) out.push_back(std::move(c));
  return out;
}

struct AchieverInfo {
  SymbolString rotation;  // starts with 0^k
  bool is_family_member = false;
  bool reverse_achieves = false;
  bool complement_achieves = false;
  bool reverse_complement_achieves = false;
  /// Set when BWT(rotation$) is the pattern with a sentinel inserted there.
  std::optional<std::size_t> sentinel_insertion;
};

/// Report-level probe of the uniqueness conjecture for one order k. Only
/// internal inconsistencies count as failures.
struct ConjectureReport {
  std::size_t k = 0;
  bool trinomial_primitive = false;
  DollarScan scan;

  bool enumerated = false;
  std::string enumeration_notice;
  std::size_t cycle_count = 0;
  std::size_t expected_cycle_count = 0;
  std::vector<AchieverInfo> achievers;
  bool family_member_found = false;

  /// For non-primitive trinomials the expectation is an empty scan.
  std::optional<bool> expectation_met;
  std::vector<std::string> inconsistencies;

  [[nodiscard]] bool consistent() const noexcept { return inconsistencies.empty(); }
};

inline ConjectureReport conjecture_report(std::size_t k, unsigned threads = 1, std::size_t cap = kEnumerationCap) {
  ConjectureReport rep;
  rep.k = k;
  rep.trinomial_primitive = is_primitive(trinomial(static_cast<unsigned>(k)));
  const SymbolString pattern = runmin_pattern(k);
  rep.scan = dollar_positions(pattern, threads);
  if (!rep.trinomial_primitive) rep.expectation_met = rep.scan.valid_positions.empty();

  for (std::size_t i = 0; i < rep.scan.valid_positions.size(); ++i) {
    if (!(bwt(rep.scan.recovered[i]).last_column == insert_sentinel(pattern, rep.scan.valid_positions[i])))
      rep.inconsistencies.push_back("recovered text for position " + std::to_string(rep.scan.valid_positions[i]) +
                                    " does not reproduce its column");
  }

  if (k > cap) {
    rep.enumeration_notice = "order " + std::to_string(k) + " above enumeration cap " + std::to_string(cap) +
                             "; sentinel scan only";
    return rep;
  }

  const auto cycles = enumerate_debruijn(k, cap);
  rep.enumerated = true;
  rep.cycle_count = cycles.size();
  rep.expected_cycle_count = debruijn_cycle_count(k);
  if (rep.cycle_count != rep.expected_cycle_count)
    rep.inconsistencies.push_back("enumerated " + std::to_string(rep.cycle_count) + " cycles, expected " +
                                  std::to_string(rep.expected_cycle_count));

  auto achieves = [&](const SymbolString& w) { return cbwt(CyclicWord(w, k)).last_column == pattern; };
  std::optional<SymbolString> member;
  if (rep.trinomial_primitive) member = canonical_rotation(make_runmin(k));

  for (const auto& c : cycles) {
    if (!is_debruijn(c.word, 2, k)) rep.inconsistencies.push_back("enumerated cycle is not de Bruijn");
    if (!(cbwt(c.word).last_column == pattern)) continue;
    AchieverInfo info;
    info.rotation = c.word.linear();
    info.is_family_member = member && *member == info.rotation;
    info.reverse_achieves = achieves(reverse(info.rotation));
    info.complement_achieves = achieves(complement(info.rotation));
    info.reverse_complement_achieves = achieves(complement(reverse(info.rotation)));

    const SymbolString column = bwt(terminate(info.rotation)).last_column;
    Word stripped;
    std::size_t at = 0;
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (column[i] == kSentinel) at = i;
      else stripped.push_back(column[i]);
    }
    if (stripped == pattern.ranks()) {
      info.sentinel_insertion = at;
      const auto& valid = rep.scan.valid_positions;
      if (std::find(valid.begin(), valid.end(), at) == valid.end())
        rep.inconsistencies.push_back("achiever BWT is a sentinel insertion at " + std::to_string(at) +
                                      " but the scan rejected that position");
    }
    rep.family_member_found = rep.family_member_found || info.is_family_member;
    rep.achievers.push_back(std::move(info));
  }
  if (member && !rep.family_member_found)
    rep.inconsistencies.push_back("M_" + std::to_string(k) + " is missing from the achievers");
  return rep;
}

}  // namespace chir
