// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

// Definition-level reference implementations. They share no code with the
// suffix-array paths and exist to cross-check them.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chir/strings.hpp"

namespace chir::oracle {

inline constexpr std::size_t kDefaultCap = 512;

/// Suffix array by comparison sort of explicit suffixes.
inline std::vector<std::size_t> naive_suffix_array(const Word& text) {
  std::vector<std::size_t> sa(text.size());
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(text.begin() + static_cast<std::ptrdiff_t>(a), text.end(),
                                        text.begin() + static_cast<std::ptrdiff_t>(b), text.end());
  });
  return sa;
}

/// Last column of the explicitly built, sorted rotation matrix. Equal rows are
/// ordered by their cut index.
inline Word rotation_matrix_last_column(const Word& text) {
  const std::size_t n = text.size();
  std::vector<std::pair<Word, std::size_t>> rows;
  rows.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    Word row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = text[(i + c) % n];
    rows.emplace_back(std::move(row), c);
  }
  std::sort(rows.begin(), rows.end());
  Word last;
  last.reserve(n);
  for (const auto& row : rows) last.push_back(row.first.back());
  return last;
}

struct Extensions {
  std::set<Word> right;          // E_r
  std::set<Word> super_maximal;  // S_r
};

/// Enumerates every substring and its one-symbol extensions. With
/// `sentinel_is_symbol` false, the sentinel is treated as the end of text.
inline Extensions brute_force_extensions(const Word& text, bool sentinel_is_symbol = true,
                                         std::size_t cap = kDefaultCap) {
  if (text.size() > cap) throw budget_exceeded("oracle: input longer than cap " + std::to_string(cap));
  std::size_t n = text.size();
  if (!sentinel_is_symbol && n > 0 && text.back() == kSentinel) --n;

  std::map<Word, std::set<Rank>> followers;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Word x(text.begin() + static_cast<std::ptrdiff_t>(i), text.begin() + static_cast<std::ptrdiff_t>(j));
      followers[x].insert(text[j]);
    }
  }

  Extensions out;
  for (const auto& [x, next] : followers) {
    if (next.size() < 2) continue;
    for (Rank a : next) {
      Word xa = x;
      xa.push_back(a);
      out.right.insert(std::move(xa));
    }
  }
  for (const auto& x : out.right) {
    bool maximal = true;
    for (const auto& y : out.right) {
      if (y.size() > x.size() && std::equal(x.rbegin(), x.rend(), y.rbegin())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.super_maximal.insert(x);
  }
  return out;
}

/// χ of a terminated string straight from the definitions.
inline std::size_t brute_force_chi(const SymbolString& w, std::size_t cap = kDefaultCap) {
  detail::require(w.terminated(), "brute_force_chi: input must be terminated");
  return brute_force_extensions(w.ranks(), true, cap).super_maximal.size();
}

/// Whether `positions` covers every right-extension: each x in E_r is a suffix
/// of text[0..j] for some j in `positions`.
inline bool is_suffixient(const Word& text, const std::set<Word>& right, const std::vector<std::size_t>& positions) {
  for (const auto& x : right) {
    bool covered = false;
    for (std::size_t j : positions) {
      if (j + 1 >= x.size() && j < text.size() &&
          std::equal(x.begin(), x.end(), text.begin() + static_cast<std::ptrdiff_t>(j + 1 - x.size()))) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace chir::oracle
