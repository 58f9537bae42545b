// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chir/bwt.hpp"
#include "chir/rational.hpp"
#include "chir/suffixient.hpp"

namespace chir {

inline constexpr std::size_t kDeBruijnBudget = std::size_t{1} << 26;

namespace detail {

// σ^k, or 0 when it exceeds `limit`.
inline std::size_t bounded_power(std::size_t sigma, std::size_t k, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > limit / sigma) return 0;
    v *= sigma;
  }
  return v <= limit ? v : 0;
}

}  // namespace detail

/// Every length-k word over the alphabet occurs exactly once as a cyclic window.
inline bool is_debruijn(const CyclicWord& c, std::size_t sigma, std::size_t k) {
  if (sigma < 1 || k < 1 || c.sigma() < sigma) return false;
  const std::size_t n = detail::bounded_power(sigma, k, kDeBruijnBudget);
  if (n == 0 || c.size() != n) return false;
  for (Rank r : c.ranks())
    if (static_cast<std::size_t>(r) >= sigma) return false;

  std::size_t top = n / sigma;  // σ^{k-1}
  std::vector<bool> seen(n, false);
  std::size_t window = 0;
  for (std::size_t i = 0; i < k; ++i) window = window * sigma + static_cast<std::size_t>(c.at(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[window]) return false;
    seen[window] = true;
    window = (window % top) * sigma + static_cast<std::size_t>(c.at(i + k));
  }
  return true;
}

/// A cycle verified to be de Bruijn of order k over σ symbols.
struct DeBruijnCycle {
  CyclicWord word;
  std::size_t sigma = 0;
  std::size_t k = 0;

  static DeBruijnCycle from(CyclicWord word, std::size_t k) {
    const std::size_t sigma = word.sigma();
    if (!is_debruijn(word, sigma, k))
      throw contract_error("DeBruijnCycle: word is not de Bruijn of order " + std::to_string(k));
    return DeBruijnCycle{CyclicWord(word.alphabet_ptr(), word.ranks(), k), sigma, k};
  }
};

/// Least de Bruijn cycle of order k: the concatenation, in lexicographic
/// order, of the Lyndon words whose length divides k.
inline DeBruijnCycle lex_least_debruijn(std::size_t sigma, std::size_t k) {
  detail::require(sigma >= 2 && k >= 1, "lex_least_debruijn: need sigma >= 2 and k >= 1");
  const std::size_t n = detail::bounded_power(sigma, k, kDeBruijnBudget);
  if (n == 0) throw budget_exceeded("lex_least_debruijn: sigma^k exceeds the size budget");

  Word out;
  out.reserve(n);
  std::vector<std::size_t> a(k + 1, 0);
  // iterative FKM over prenecklaces; emit a[1..p] whenever p divides k
  out.push_back(0);
  while (true) {
    std::size_t i = k;
    while (i > 0 && a[i] == sigma - 1) --i;
    if (i == 0) break;
    a[i] += 1;
    for (std::size_t j = i + 1; j <= k; ++j) a[j] = a[j - i];
    if (k % i == 0)
      for (std::size_t j = 1; j <= i; ++j) out.push_back(static_cast<Rank>(a[j]));
  }
  return DeBruijnCycle::from(CyclicWord(make_alphabet(Alphabet::ranked(sigma)), std::move(out), k), k);
}

/// The rotation beginning with 0^k, unique in a de Bruijn cycle.
inline SymbolString canonical_rotation(const CyclicWord& c, std::size_t k) {
  const std::size_t n = c.size();
  detail::require(k >= 1 && n >= k, "canonical_rotation: order out of range");
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < k - 1; ++i) zeros = c.at(i) == 0 ? zeros + 1 : 0;
  for (std::size_t end = k - 1; end < n + k - 1; ++end) {
    zeros = c.at(end) == 0 ? zeros + 1 : 0;
    if (zeros >= k) return rotate(c, (end + 1 - k) % n);
  }
  throw contract_error("canonical_rotation: window 0^k absent, input is not de Bruijn");
}

inline SymbolString canonical_rotation(const DeBruijnCycle& c) { return canonical_rotation(c.word, c.k); }

/// Measures of the linearized, terminated canonical rotation of a σ-ary de
/// Bruijn cycle against the closed forms sre = σ^k, χ = σ^k + 1,
/// r >= σ^{k-1}(σ-1) + 1 and χ/r < σ/(σ-1).
struct SigmaBoundsReport {
  std::size_t sigma = 0;
  std::size_t k = 0;
  std::size_t sre = 0;
  std::size_t chi = 0;
  std::size_t r = 0;
  std::size_t r_lower_bound = 0;
  Rational ratio;
  Rational ratio_bound;
  bool sre_ok = false;
  bool chi_ok = false;
  bool r_lb_ok = false;
  bool ratio_ok = false;

  [[nodiscard]] bool ok() const noexcept { return sre_ok && chi_ok && r_lb_ok && ratio_ok; }
};

inline SigmaBoundsReport verify_sigma_bounds(const DeBruijnCycle& c) {
  if (!is_debruijn(c.word, c.sigma, c.k)) throw contract_error("verify_sigma_bounds: not a de Bruijn cycle");
  detail::require(c.k >= 2, "verify_sigma_bounds: linearization needs k >= 2");
  const SymbolString lin = linearize(CyclicWord(canonical_rotation(c), c.k), c.k);
  const SymbolString lin_term = terminate(lin);
  const std::size_t power = c.word.size();

  SigmaBoundsReport rep;
  rep.sigma = c.sigma;
  rep.k = c.k;
  rep.sre = sre(lin);
  rep.chi = smallest_suffixient_set(lin_term).chi;
  rep.r = bwt(lin_term).runs;
  rep.r_lower_bound = power / c.sigma * (c.sigma - 1) + 1;
  rep.ratio = Rational(static_cast<std::int64_t>(rep.chi), static_cast<std::int64_t>(rep.r));
  rep.ratio_bound = Rational(static_cast<std::int64_t>(c.sigma), static_cast<std::int64_t>(c.sigma - 1));
  rep.sre_ok = rep.sre == power;
  rep.chi_ok = rep.chi == power + 1;
  rep.r_lb_ok = rep.r >= rep.r_lower_bound;
  rep.ratio_ok = rep.ratio < rep.ratio_bound;
  return rep;
}

}  // namespace chir
