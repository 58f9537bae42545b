// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <set>
#include <vector>

#include "chir/strings.hpp"

namespace chir {

/// One occurrence of a word in the analysed text: the word is
/// text[end - length + 1 .. end].
struct Occurrence {
  std::size_t end = 0;
  std::size_t length = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct ExtensionOptions {
  /// Materialise every right-extension occurrence (memory grows with the
  /// number of suffix-tree edges, so off by default).
  bool collect_right_extensions = false;
};

/// Right-extensions E_r, super-maximal extensions S_r and a smallest
/// suffixient set. Every occurrence is the first one in the text, so
/// `suffixient_positions` holds the end of each super-maximal extension.
struct ExtensionReport {
  std::vector<Occurrence> right_extensions;
  std::size_t right_extension_count = 0;
  std::vector<Occurrence> super_maximal;
  std::size_t sre = 0;
  std::vector<std::size_t> suffixient_positions;
  std::size_t chi = 0;
};

namespace detail {

// Left-context sets are indexed by rank; alphabets hold at most 256 symbols.
using LeftSet = std::bitset<256>;

struct Subtree {
  LeftSet left;
  std::size_t first = 0;  // smallest text position in the interval
};

struct Frame {
  std::size_t depth = 0;
  std::size_t first_child = 0;
};

// Bottom-up walk over the LCP intervals of `text` (terminated). Each interval
// with two or more children is a right-maximal substring x; each child is a
// right-extension xa. xa is super-maximal iff no left symbol c precedes both
// xa and some other xb, i.e. cx is not right-maximal with cxa occurring.
// With `sentinel_is_symbol` false the sentinel acts only as an end marker:
// it neither extends x nor counts towards right-maximality.
inline ExtensionReport analyze_extensions(const SymbolString& text, bool sentinel_is_symbol,
                                          const ExtensionOptions& options) {
  ExtensionReport report;
  const auto& t = text.ranks();
  const std::size_t n = t.size();
  if (n == 0) return report;

  const auto sa = suffix_array(text);
  const auto lcp = lcp_array(text, sa);

  auto leaf = [&](std::size_t row) {
    Subtree s;
    s.first = sa[row];
    if (sa[row] > 0) s.left.set(static_cast<std::size_t>(t[sa[row] - 1]));
    return s;
  };

  std::vector<Subtree> children;
  std::vector<Frame> frames{Frame{0, 0}};
  std::vector<std::size_t> real;

  auto close = [&](const Frame& frame) {
    const std::size_t depth = frame.depth;
    Subtree merged;
    merged.first = n;
    real.clear();
    for (std::size_t c = frame.first_child; c < children.size(); ++c) {
      merged.left |= children[c].left;
      merged.first = std::min(merged.first, children[c].first);
      if (sentinel_is_symbol || t[children[c].first + depth] != kSentinel) real.push_back(c);
    }
    if (real.size() >= 2) {
      LeftSet once, twice;
      for (std::size_t c : real) {
        twice |= once & children[c].left;
        once |= children[c].left;
      }
      for (std::size_t c : real) {
        const Occurrence occ{children[c].first + depth, depth + 1};
        ++report.right_extension_count;
        if (options.collect_right_extensions) report.right_extensions.push_back(occ);
        if ((children[c].left & twice).none()) report.super_maximal.push_back(occ);
      }
    }
    children.resize(frame.first_child);
    return merged;
  };

  for (std::size_t i = 1; i <= n; ++i) {
    Subtree pending = leaf(i - 1);
    const std::size_t h = i < n ? lcp[i] : 0;
    while (h < frames.back().depth) {
      children.push_back(pending);
      const Frame frame = frames.back();
      frames.pop_back();
      pending = close(frame);
    }
    if (h > frames.back().depth) frames.push_back(Frame{h, children.size()});
    children.push_back(pending);
  }
  close(frames.back());

  auto by_end = [](const Occurrence& a, const Occurrence& b) { return a.end < b.end; };
  std::sort(report.super_maximal.begin(), report.super_maximal.end(), by_end);
  std::sort(report.right_extensions.begin(), report.right_extensions.end(), by_end);
  report.sre = report.super_maximal.size();
  for (const auto& occ : report.super_maximal) report.suffixient_positions.push_back(occ.end);
  report.chi = report.suffixient_positions.size();
  return report;
}

// Terminated strings are analysed as given; unterminated ones get an internal
// end marker that is not an extension symbol.
inline ExtensionReport analyze(const SymbolString& w, const ExtensionOptions& options) {
  if (w.terminated()) return analyze_extensions(w, true, options);
  detail::require(w.sentinel_count() == 0, "extension analysis: stray sentinel in input");
  return analyze_extensions(terminate(w), false, options);
}

}  // namespace detail

inline Word materialize(const SymbolString& text, const Occurrence& occ) {
  const auto first = text.ranks().begin() + static_cast<std::ptrdiff_t>(occ.end + 1 - occ.length);
  return Word(first, first + static_cast<std::ptrdiff_t>(occ.length));
}

/// E_r(w) as explicit words. Intended for small inputs.
inline std::set<Word> right_extensions(const SymbolString& w) {
  const auto report = detail::analyze(w, ExtensionOptions{true});
  const SymbolString& text = w;
  std::set<Word> out;
  for (const auto& occ : report.right_extensions) out.insert(materialize(text, occ));
  return out;
}

/// S_r(w) as explicit words.
inline std::set<Word> super_maximal_extensions(const SymbolString& w) {
  const auto report = detail::analyze(w, ExtensionOptions{});
  std::set<Word> out;
  for (const auto& occ : report.super_maximal) out.insert(materialize(w, occ));
  return out;
}

/// |S_r(w)|, on `w` exactly as given (terminated or not).
inline std::size_t sre(const SymbolString& w) { return detail::analyze(w, ExtensionOptions{}).sre; }

/// A smallest suffixient set of the terminated string `w`; chi = |S_r(w)|.
inline ExtensionReport smallest_suffixient_set(const SymbolString& w, const ExtensionOptions& options = {}) {
  detail::require(w.terminated(), "smallest_suffixient_set: input must be terminated");
  return detail::analyze(w, options);
}

/// χ of an unterminated word, evaluated on w$.
inline std::size_t chi(const SymbolString& w) {
  return w.terminated() ? smallest_suffixient_set(w).chi : smallest_suffixient_set(terminate(w)).chi;
}

}  // namespace chir
