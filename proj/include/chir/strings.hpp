// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chir/errors.hpp"

namespace chir {

/// Symbols are stored as ranks in the ordered alphabet; rank 0 is the smallest.
using Rank = std::int32_t;

/// The virtual end marker. It sorts below every alphabet symbol and is never
/// an input byte.
inline constexpr Rank kSentinel = -1;
inline constexpr char kSentinelLabel = '$';

using Word = std::vector<Rank>;

/// Ordered set of byte labels. The sentinel label is reserved and can't be a member.
class Alphabet {
 public:
  explicit Alphabet(std::vector<unsigned char> symbols) : symbols_(std::move(symbols)) {
    detail::require(!symbols_.empty(), "Alphabet: empty symbol list");
    index_.fill(kAbsent);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i > 0 && symbols_[i - 1] >= symbols_[i])
        throw contract_error("Alphabet: symbols must be strictly increasing");
      if (symbols_[i] == static_cast<unsigned char>(kSentinelLabel))
        throw contract_error("Alphabet: '$' is reserved for the sentinel");
      index_[symbols_[i]] = static_cast<Rank>(i);
    }
  }

  /// Sorted distinct bytes of `text`.
  static Alphabet from_text(std::string_view text) {
    std::array<bool, 256> seen{};
    for (char ch : text) seen[static_cast<unsigned char>(ch)] = true;
    std::vector<unsigned char> symbols;
    for (std::size_t b = 0; b < seen.size(); ++b)
      if (seen[b]) symbols.push_back(static_cast<unsigned char>(b));
    return Alphabet(std::move(symbols));
  }

  static Alphabet binary() { return Alphabet({'0', '1'}); }

  static Alphabet digits() {
    std::vector<unsigned char> symbols;
    for (unsigned char c = '0'; c <= '9'; ++c) symbols.push_back(c);
    return Alphabet(std::move(symbols));
  }

  /// Every byte except the sentinel label.
  static Alphabet bytes() {
    std::vector<unsigned char> symbols;
    for (int b = 0; b < 256; ++b)
      if (b != kSentinelLabel) symbols.push_back(static_cast<unsigned char>(b));
    return Alphabet(std::move(symbols));
  }

  /// The first `sigma` labels of 0-9, A-Z, a-z; raw bytes beyond 62 symbols.
  static Alphabet ranked(std::size_t sigma) {
    detail::require(sigma >= 1 && sigma <= 255, "Alphabet::ranked: sigma out of range");
    std::vector<unsigned char> symbols;
    if (sigma <= 62) {
      static constexpr std::string_view kLabels =
          "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
      for (std::size_t i = 0; i < sigma; ++i) symbols.push_back(static_cast<unsigned char>(kLabels[i]));
    } else {
      for (int b = 0; symbols.size() < sigma; ++b)
        if (b != kSentinelLabel) symbols.push_back(static_cast<unsigned char>(b));
    }
    return Alphabet(std::move(symbols));
  }

  /// Resolves a declared alphabet name: "sorted" derives it from `text`.
  static Alphabet named(std::string_view name, std::string_view text) {
    if (name == "sorted") return from_text(text);
    if (name == "binary") return binary();
    if (name == "digits") return digits();
    if (name == "bytes") return bytes();
    throw contract_error("unknown alphabet '" + std::string(name) + "'");
  }

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] const std::vector<unsigned char>& symbols() const noexcept { return symbols_; }

  [[nodiscard]] char label(Rank rank) const {
    if (rank == kSentinel) return kSentinelLabel;
    detail::require(rank >= 0 && static_cast<std::size_t>(rank) < symbols_.size(),
                    "Alphabet::label: rank out of range");
    return static_cast<char>(symbols_[static_cast<std::size_t>(rank)]);
  }

  [[nodiscard]] std::optional<Rank> rank_of(unsigned char byte) const noexcept {
    const Rank r = index_[byte];
    if (r == kAbsent) return std::nullopt;
    return r;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  static constexpr Rank kAbsent = -2;
  std::vector<unsigned char> symbols_;
  std::array<Rank, 256> index_{};
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(Alphabet alphabet) {
  return std::make_shared<const Alphabet>(std::move(alphabet));
}

/// A finite word over an alphabet. A terminated string carries exactly one
/// sentinel, in its final position. Unterminated strings only hold a sentinel
/// when they are BWT output columns.
class SymbolString {
 public:
  SymbolString() : alphabet_(make_alphabet(Alphabet::binary())) {}

  SymbolString(AlphabetPtr alphabet, Word ranks, bool terminated)
      : alphabet_(std::move(alphabet)), ranks_(std::move(ranks)), terminated_(terminated) {
    detail::require(alphabet_ != nullptr, "SymbolString: null alphabet");
    const auto sigma = static_cast<Rank>(alphabet_->size());
    std::size_t sentinels = 0;
    for (Rank r : ranks_) {
      if (r == kSentinel) {
        ++sentinels;
        continue;
      }
      detail::require(r >= 0 && r < sigma, "SymbolString: rank outside alphabet");
    }
    if (terminated_)
      detail::require(sentinels == 1 && ranks_.back() == kSentinel,
                      "SymbolString: terminated string needs exactly one trailing sentinel");
  }

  /// Maps each byte through `alphabet`; '$' becomes the sentinel. The result is
  /// terminated iff the only '$' is the last byte.
  static SymbolString parse(std::string_view text, AlphabetPtr alphabet) {
    Word ranks;
    ranks.reserve(text.size());
    std::size_t sentinels = 0;
    for (char ch : text) {
      if (ch == kSentinelLabel) {
        ranks.push_back(kSentinel);
        ++sentinels;
        continue;
      }
      auto r = alphabet->rank_of(static_cast<unsigned char>(ch));
      if (!r) throw contract_error(std::string("symbol '") + ch + "' is not in the alphabet");
      ranks.push_back(*r);
    }
    const bool terminated = sentinels == 1 && !ranks.empty() && ranks.back() == kSentinel;
    return SymbolString(std::move(alphabet), std::move(ranks), terminated);
  }

  /// Parses with the alphabet of sorted distinct non-'$' bytes of `text`.
  static SymbolString parse(std::string_view text) {
    std::string symbols;
    for (char ch : text)
      if (ch != kSentinelLabel) symbols.push_back(ch);
    if (symbols.empty()) symbols = "0";
    return parse(text, make_alphabet(Alphabet::from_text(symbols)));
  }

  [[nodiscard]] std::size_t size() const noexcept { return ranks_.size(); }
  [[nodiscard]] bool empty() const noexcept { return ranks_.empty(); }
  [[nodiscard]] Rank operator[](std::size_t i) const { return ranks_[i]; }
  [[nodiscard]] const Word& ranks() const noexcept { return ranks_; }
  [[nodiscard]] bool terminated() const noexcept { return terminated_; }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return *alphabet_; }
  [[nodiscard]] const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t sigma() const noexcept { return alphabet_->size(); }

  [[nodiscard]] std::size_t sentinel_count() const noexcept {
    return static_cast<std::size_t>(std::count(ranks_.begin(), ranks_.end(), kSentinel));
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    out.reserve(ranks_.size());
    for (Rank r : ranks_) out.push_back(alphabet_->label(r));
    return out;
  }

  friend bool operator==(const SymbolString& a, const SymbolString& b) {
    return a.terminated_ == b.terminated_ && a.ranks_ == b.ranks_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  AlphabetPtr alphabet_;
  Word ranks_;
  bool terminated_ = false;
};

/// A word read cyclically; `order` is the window length of interest (0 if unused).
class CyclicWord {
 public:
  CyclicWord() : alphabet_(make_alphabet(Alphabet::binary())) {}

  CyclicWord(AlphabetPtr alphabet, Word ranks, std::size_t order = 0)
      : alphabet_(std::move(alphabet)), ranks_(std::move(ranks)), order_(order) {
    const auto sigma = static_cast<Rank>(alphabet_->size());
    for (Rank r : ranks_)
      detail::require(r >= 0 && r < sigma, "CyclicWord: rank outside alphabet (sentinel not allowed)");
  }

  explicit CyclicWord(const SymbolString& w, std::size_t order = 0)
      : CyclicWord(w.alphabet_ptr(), w.ranks(), order) {}

  static CyclicWord parse(std::string_view text, AlphabetPtr alphabet, std::size_t order = 0) {
    return CyclicWord(SymbolString::parse(text, std::move(alphabet)), order);
  }

  [[nodiscard]] std::size_t size() const noexcept { return ranks_.size(); }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Rank at(std::size_t i) const { return ranks_[i % ranks_.size()]; }
  [[nodiscard]] const Word& ranks() const noexcept { return ranks_; }
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return *alphabet_; }
  [[nodiscard]] const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t sigma() const noexcept { return alphabet_->size(); }

  [[nodiscard]] SymbolString linear() const { return SymbolString(alphabet_, ranks_, false); }
  [[nodiscard]] std::string to_string() const { return linear().to_string(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.ranks_ == b.ranks_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  AlphabetPtr alphabet_;
  Word ranks_;
  std::size_t order_ = 0;
};

inline SymbolString rotate(const CyclicWord& c, std::size_t cut) {
  if (cut >= c.size()) throw std::out_of_range("rotate: cut out of range");
  const auto& src = c.ranks();
  Word out(src.begin() + static_cast<std::ptrdiff_t>(cut), src.end());
  out.insert(out.end(), src.begin(), src.begin() + static_cast<std::ptrdiff_t>(cut));
  return SymbolString(c.alphabet_ptr(), std::move(out), false);
}

inline SymbolString reverse(const SymbolString& w) {
  detail::require(w.sentinel_count() == 0, "reverse: the sentinel never takes part in reversal");
  Word out(w.ranks().rbegin(), w.ranks().rend());
  return SymbolString(w.alphabet_ptr(), std::move(out), false);
}

inline SymbolString complement(const SymbolString& w) {
  if (w.sigma() != 2) throw unsupported_alphabet("complement: binary alphabet required");
  detail::require(w.sentinel_count() == 0, "complement: sentinel not allowed");
  Word out(w.ranks());
  for (Rank& r : out) r ^= 1;
  return SymbolString(w.alphabet_ptr(), std::move(out), false);
}

/// U U[0..k-2]: every cyclic k-window of `c` becomes a plain substring.
inline SymbolString linearize(const CyclicWord& c, std::size_t k) {
  detail::require(k >= 2, "linearize: order must be at least 2");
  detail::require(c.size() >= k, "linearize: word shorter than the order");
  Word out(c.ranks());
  out.insert(out.end(), c.ranks().begin(), c.ranks().begin() + static_cast<std::ptrdiff_t>(k - 1));
  return SymbolString(c.alphabet_ptr(), std::move(out), false);
}

inline SymbolString terminate(const SymbolString& w) {
  detail::require(!w.terminated() && w.sentinel_count() == 0, "terminate: string already holds a sentinel");
  Word out(w.ranks());
  out.push_back(kSentinel);
  return SymbolString(w.alphabet_ptr(), std::move(out), true);
}

/// Sorts the cyclic rotations of `text` by prefix doubling with counting sorts.
/// Equal rotations (periodic input) are ordered by ascending start index.
/// Returns the start index of each rotation in sorted order.
inline std::vector<std::size_t> sort_rotations(std::span<const Rank> text) {
  const std::size_t n = text.size();
  if (n == 0) return {};
  if (n >= std::numeric_limits<std::uint32_t>::max())
    throw budget_exceeded("sort_rotations: input exceeds 32-bit index range");
  using idx = std::uint32_t;

  Rank max_rank = kSentinel;
  for (Rank r : text) max_rank = std::max(max_rank, r);
  // shift so the sentinel lands on bucket 0
  std::size_t buckets = static_cast<std::size_t>(max_rank) + 2;

  std::vector<idx> order(n), next_order(n), cls(n), next_cls(n);
  std::vector<idx> count(std::max(buckets, n) + 1, 0);

  for (std::size_t i = 0; i < n; ++i) ++count[static_cast<std::size_t>(text[i] + 1)];
  for (std::size_t b = 1; b < buckets; ++b) count[b] += count[b - 1];
  for (std::size_t i = n; i-- > 0;) order[--count[static_cast<std::size_t>(text[i] + 1)]] = static_cast<idx>(i);

  idx classes = 1;
  cls[order[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (text[order[i]] != text[order[i - 1]]) ++classes;
    cls[order[i]] = classes - 1;
  }

  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i)
      next_order[i] = static_cast<idx>((order[i] + n - h % n) % n);
    std::fill(count.begin(), count.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[cls[next_order[i]]];
    for (idx c = 1; c < classes; ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) order[--count[cls[next_order[i]]]] = next_order[i];

    next_cls[order[0]] = 0;
    idx fresh = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t a = order[i], b = order[i - 1];
      if (cls[a] != cls[b] || cls[(a + h) % n] != cls[(b + h) % n]) ++fresh;
      next_cls[a] = fresh - 1;
    }
    cls.swap(next_cls);
    classes = fresh;
  }

  // final stable pass: ties resolved by start index
  std::fill(count.begin(), count.begin() + classes + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[cls[i] + 1];
  for (idx c = 1; c <= classes; ++c) count[c] += count[c - 1];
  std::vector<std::size_t> result(n);
  for (std::size_t i = 0; i < n; ++i) result[count[cls[i]]++] = i;
  return result;
}

/// Suffix array of a terminated string. With a unique smallest sentinel at the
/// end, suffix order coincides with rotation order.
inline std::vector<std::size_t> suffix_array(const SymbolString& w) {
  detail::require(w.terminated(), "suffix_array: input must be terminated");
  return sort_rotations(w.ranks());
}

/// Kasai's linear-time LCP; lcp[i] is the LCP of suffixes sa[i-1] and sa[i].
inline std::vector<std::size_t> lcp_array(const SymbolString& w, std::span<const std::size_t> sa) {
  const std::size_t n = w.size();
  detail::require(sa.size() == n, "lcp_array: suffix array length mismatch");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    detail::require(sa[i] < n && rank[sa[i]] == n, "lcp_array: not a permutation");
    rank[sa[i]] = i;
  }
  const auto& t = w.ranks();
  std::vector<std::size_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

/// Lexicographically least rotation; the canonical representative of a cycle.
inline SymbolString least_rotation(const CyclicWord& c) {
  if (c.size() == 0) return c.linear();
  return rotate(c, sort_rotations(c.ranks()).front());
}

inline bool equal_up_to_rotation(const CyclicWord& a, const CyclicWord& b) {
  return a.size() == b.size() && a.alphabet() == b.alphabet() && least_rotation(a) == least_rotation(b);
}

}  // namespace chir
