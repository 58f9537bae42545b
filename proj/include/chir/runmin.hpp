// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chir/bwt.hpp"
#include "chir/debruijn.hpp"
#include "chir/lfsr.hpp"
#include "chir/rational.hpp"
#include "chir/suffixient.hpp"

namespace chir {

namespace detail {

inline void append_bits(Word& out, std::string_view bits, std::size_t times = 1) {
  for (std::size_t t = 0; t < times; ++t)
    for (char b : bits) out.push_back(b == '1' ? 1 : 0);
}

inline void require_order(std::size_t k, const char* where) {
  if (k < 2 || k > 40) throw contract_error(std::string(where) + ": order must lie in [2, 40]");
}

}  // namespace detail

/// 1 (0011)^{2^{k-2}-1} 010, of length 2^k.
inline SymbolString runmin_pattern(std::size_t k) {
  detail::require_order(k, "runmin_pattern");
  Word out;
  out.reserve(std::size_t{1} << k);
  detail::append_bits(out, "1");
  detail::append_bits(out, "0011", (std::size_t{1} << (k - 2)) - 1);
  detail::append_bits(out, "010");
  return SymbolString(detail::binary_alphabet(), std::move(out), false);
}

/// 0^{k-1} 1 $ (0011)^{2^{k-2}-1} 010: the BWT of the linearized, terminated
/// canonical rotation of M_k.
inline SymbolString runmin_linearized_bwt(std::size_t k) {
  detail::require_order(k, "runmin_linearized_bwt");
  Word out;
  out.reserve((std::size_t{1} << k) + k);
  out.insert(out.end(), k - 1, 0);
  out.push_back(1);
  out.push_back(kSentinel);
  detail::append_bits(out, "0011", (std::size_t{1} << (k - 2)) - 1);
  detail::append_bits(out, "010");
  return SymbolString(detail::binary_alphabet(), std::move(out), false);
}

inline std::size_t runmin_expected_rc(std::size_t k) { return (std::size_t{1} << (k - 1)) + 2; }
inline std::size_t runmin_expected_r(std::size_t k) { return (std::size_t{1} << (k - 1)) + 4; }
inline std::size_t runmin_expected_chi(std::size_t k) { return (std::size_t{1} << k) + 1; }

/// (2^k + 1) / (2^{k-1} + 4).
inline Rational runmin_expected_ratio(std::size_t k) {
  return Rational(static_cast<std::int64_t>(runmin_expected_chi(k)), static_cast<std::int64_t>(runmin_expected_r(k)));
}

/// M_k: the joined LFSR cycle of x^k + x + 1, reversed and complemented.
inline DeBruijnCycle make_runmin(std::size_t k) {
  detail::require_order(k, "make_runmin");
  const F2Poly t = trinomial(static_cast<unsigned>(k));
  if (!is_primitive(t))
    throw not_in_family("make_runmin: " + t.to_string() + " is not primitive, so M_" + std::to_string(k) +
                        " does not exist");
  return DeBruijnCycle::from(joined_transformed_sequence(static_cast<unsigned>(k)), k);
}

/// First mismatch between two columns, with 16 symbols of context from each.
struct Mismatch {
  std::size_t index = 0;
  std::string expected_context;
  std::string actual_context;
};

inline std::optional<Mismatch> first_mismatch(const SymbolString& expected, const SymbolString& actual) {
  const std::size_t n = std::min(expected.size(), actual.size());
  std::size_t i = 0;
  while (i < n && expected[i] == actual[i]) ++i;
  if (i == n && expected.size() == actual.size()) return std::nullopt;
  const std::size_t from = i >= 8 ? i - 8 : 0;
  auto window = [&](const SymbolString& s) {
    const std::string text = s.to_string();
    return from < text.size() ? text.substr(from, 16) : std::string{};
  };
  return Mismatch{i, window(expected), window(actual)};
}

struct RunMinReport {
  std::size_t k = 0;
  DeBruijnCycle cycle;
  SymbolString cbwt_column;
  bool cbwt_pattern_ok = false;
  std::size_t r_c = 0;
  SymbolString rotation;  // U, starting with 0^k
  SymbolString last_column;  // BWT of U_lin$
  bool last_column_ok = false;
  std::size_t r = 0;
  std::size_t r_bar = 0;
  std::size_t chi = 0;
  std::size_t sre = 0;  // of U_lin, unterminated
  Rational ratio;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

/// Builds M_k, checks its cBWT against the run-minimal pattern, then checks
/// the BWT, r, χ and χ/r of U_lin$ against their closed forms. Mismatches are
/// collected in `failures`, never thrown.
inline RunMinReport verify_linearized(std::size_t k) {
  RunMinReport rep;
  rep.k = k;
  rep.cycle = make_runmin(k);

  auto fail_column = [&](const char* what, const SymbolString& expected, const SymbolString& actual) {
    if (auto m = first_mismatch(expected, actual)) {
      rep.failures.push_back(std::string(what) + " differs at index " + std::to_string(m->index) + ": expected ..." +
                             m->expected_context + "... got ..." + m->actual_context + "...");
      return false;
    }
    return true;
  };
  auto fail_count = [&](const char* what, std::size_t expected, std::size_t actual) {
    if (expected == actual) return true;
    rep.failures.push_back(std::string(what) + " = " + std::to_string(actual) + ", expected " +
                           std::to_string(expected));
    return false;
  };

  const BwtOutput circular = cbwt(rep.cycle.word);
  rep.cbwt_column = circular.last_column;
  rep.r_c = circular.runs;
  rep.cbwt_pattern_ok = fail_column("cBWT(M_k)", runmin_pattern(k), rep.cbwt_column);
  fail_count("r_c", runmin_expected_rc(k), rep.r_c);

  rep.rotation = canonical_rotation(rep.cycle);
  const SymbolString lin = linearize(CyclicWord(rep.rotation, k), k);
  const SymbolString lin_term = terminate(lin);
  const BwtOutput forward = bwt(lin_term);
  rep.last_column = forward.last_column;
  rep.r = forward.runs;
  rep.r_bar = bwt(terminate(reverse(lin))).runs;
  const ExtensionReport ext = smallest_suffixient_set(lin_term);
  rep.chi = ext.chi;
  rep.sre = sre(lin);
  rep.ratio = Rational(static_cast<std::int64_t>(rep.chi), static_cast<std::int64_t>(rep.r));

  rep.last_column_ok = fail_column("BWT(U_lin$)", runmin_linearized_bwt(k), rep.last_column);
  fail_count("r", runmin_expected_r(k), rep.r);
  fail_count("chi", runmin_expected_chi(k), rep.chi);
  if (rep.ratio != runmin_expected_ratio(k))
    rep.failures.push_back("chi/r = " + rep.ratio.to_string() + ", expected " + runmin_expected_ratio(k).to_string());
  return rep;
}

}  // namespace chir
