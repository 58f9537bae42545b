// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "chir/gf2.hpp"
#include "chir/strings.hpp"

namespace chir {

/// LFSR state (x_0, ..., x_{k-1}) = (s_t, ..., s_{t+k-1}); bit i holds x_i.
class LfsrState {
 public:
  constexpr LfsrState() = default;
  constexpr LfsrState(std::uint64_t bits, unsigned k) : bits_(bits), k_(k) {}

  /// "001" means x_0 = 0, x_1 = 0, x_2 = 1.
  static LfsrState parse(std::string_view text) {
    detail::require(!text.empty() && text.size() <= 63, "LfsrState::parse: length must lie in [1, 63]");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      detail::require(text[i] == '0' || text[i] == '1', "LfsrState::parse: binary digits only");
      if (text[i] == '1') bits |= std::uint64_t{1} << i;
    }
    return LfsrState(bits, static_cast<unsigned>(text.size()));
  }

  static constexpr LfsrState zeros(unsigned k) { return LfsrState(0, k); }
  static constexpr LfsrState ones(unsigned k) { return LfsrState(mask(k), k); }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr unsigned size() const noexcept { return k_; }
  [[nodiscard]] constexpr bool bit(unsigned i) const noexcept { return ((bits_ >> i) & 1U) != 0; }

  [[nodiscard]] std::string to_string() const {
    std::string out(k_, '0');
    for (unsigned i = 0; i < k_; ++i)
      if (bit(i)) out[i] = '1';
    return out;
  }

  /// Drops x_0 and appends `next` as x_{k-1}.
  [[nodiscard]] constexpr LfsrState shifted_in(bool next) const noexcept {
    return LfsrState((bits_ >> 1) | (static_cast<std::uint64_t>(next) << (k_ - 1)), k_);
  }

  [[nodiscard]] static constexpr std::uint64_t mask(unsigned k) noexcept {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }

  friend constexpr bool operator==(LfsrState, LfsrState) = default;

 private:
  std::uint64_t bits_ = 0;
  unsigned k_ = 0;
};

/// Fibonacci-form successor: F(x) = (x_1, ..., x_{k-1}, XOR of c_i x_i).
inline LfsrState successor(F2Poly c, LfsrState x) {
  detail::require(c.degree() >= 1 && x.size() == static_cast<unsigned>(c.degree()),
                  "successor: state length must equal the polynomial degree");
  return x.shifted_in((std::popcount(x.bits() & c.taps()) & 1) != 0);
}

namespace detail {

inline AlphabetPtr binary_alphabet() {
  static const AlphabetPtr alphabet = make_alphabet(Alphabet::binary());
  return alphabet;
}

inline void require_primitive(F2Poly c, const char* where) {
  if (c.degree() < 2 || !is_primitive(c))
    throw contract_error(std::string(where) + ": " + c.to_string() + " is not primitive");
}

}  // namespace detail

/// The maximal-period cycle through `seed`: the sequence s_t = x_0 of each
/// visited state, of length 2^k - 1.
inline CyclicWord m_sequence(F2Poly c, LfsrState seed) {
  detail::require(seed.size() == static_cast<unsigned>(c.degree()), "m_sequence: seed length must equal the degree");
  detail::require(seed.bits() != 0, "m_sequence: the all-zero seed is a fixed point");
  detail::require_primitive(c, "m_sequence");
  const unsigned k = seed.size();
  Word out;
  out.reserve((std::size_t{1} << k) - 1);
  LfsrState x = seed;
  do {
    out.push_back(x.bit(0) ? 1 : 0);
    x = successor(c, x);
  } while (x != seed);
  return CyclicWord(detail::binary_alphabet(), std::move(out), k);
}

enum class JoinMode {
  raw,                    // the recurrence of C, main and zero cycles joined
  reversed_complemented,  // the same cycle read backwards with every bit flipped
};

/// LFSR whose two cycles are merged by swapping the successors of a conjugate
/// pair (u, v). The swap is applied inside the successor as
/// next = taps(x) ^ constant ^ ([x = u] ^ [x = v]).
///
/// raw: recurrence of C, pair (0^k, 10^{k-1}).
/// reversed_complemented: recurrence of the reciprocal C*, XORed with 1 when
/// C* has an even number of taps, pair (1^k, 01^{k-1}). Those are the states
/// whose successors change once the joined raw cycle is reversed and
/// complemented.
class JoinedLfsr {
 public:
  JoinedLfsr(F2Poly c, JoinMode mode) : poly_(c), mode_(mode) {
    detail::require(c.degree() >= 2 && c.degree() <= 62, "JoinedLfsr: degree must lie in [2, 62]");
    detail::require(c.coefficient(0), "JoinedLfsr: constant term must be 1");
    const auto k = static_cast<unsigned>(c.degree());
    if (mode == JoinMode::raw) {
      recurrence_ = c;
      constant_ = false;
      u_ = LfsrState::zeros(k);
      v_ = LfsrState(1, k);  // 10^{k-1}
    } else {
      recurrence_ = reciprocal(c);
      constant_ = (std::popcount(recurrence_.taps()) % 2) == 0;
      u_ = LfsrState::ones(k);
      v_ = LfsrState(LfsrState::mask(k) & ~std::uint64_t{1}, k);  // 01^{k-1}
    }
  }

  [[nodiscard]] F2Poly poly() const noexcept { return poly_; }
  [[nodiscard]] JoinMode mode() const noexcept { return mode_; }
  [[nodiscard]] F2Poly recurrence() const noexcept { return recurrence_; }
  [[nodiscard]] bool complemented() const noexcept { return constant_; }
  [[nodiscard]] unsigned order() const noexcept { return static_cast<unsigned>(poly_.degree()); }
  [[nodiscard]] std::pair<LfsrState, LfsrState> pair() const noexcept { return {u_, v_}; }

  /// The unjoined map F.
  [[nodiscard]] LfsrState base_successor(LfsrState x) const { return next(x, false); }

  /// The joined map F'.
  [[nodiscard]] LfsrState joined_successor(LfsrState x) const {
    const bool omega = (x == u_) != (x == v_);
    return next(x, omega);
  }

  /// Iterates F' from `start` until it returns; emits x_0 of each state.
  [[nodiscard]] CyclicWord cycle(LfsrState start) const {
    detail::require(start.size() == order(), "JoinedLfsr::cycle: state length mismatch");
    const std::size_t limit = std::size_t{1} << order();
    Word out;
    out.reserve(limit);
    LfsrState x = start;
    do {
      if (out.size() == limit) throw consistency_error("JoinedLfsr::cycle: no return within 2^k steps");
      out.push_back(x.bit(0) ? 1 : 0);
      x = joined_successor(x);
    } while (x != start);
    return CyclicWord(detail::binary_alphabet(), std::move(out), order());
  }

  [[nodiscard]] CyclicWord cycle() const { return cycle(LfsrState::zeros(order())); }

 private:
  [[nodiscard]] LfsrState next(LfsrState x, bool omega) const {
    const bool bit = ((std::popcount(x.bits() & recurrence_.taps()) & 1) != 0) != constant_;
    return x.shifted_in(bit != omega);
  }

  F2Poly poly_;
  JoinMode mode_;
  F2Poly recurrence_;
  bool constant_ = false;
  LfsrState u_;
  LfsrState v_;
};

/// Joins the main cycle of a primitive C with its all-zero self-loop.
inline JoinedLfsr cycle_join(F2Poly c) {
  detail::require_primitive(c, "cycle_join");
  return JoinedLfsr(c, JoinMode::raw);
}

/// The joined cycle of x^k + x + 1 after reversal and complement, generated
/// directly from the transformed recurrence s_{t+k} = s_{t+k-1} ^ s_t ^ 1 ^ ω.
/// Also built the second way (reverse and complement the raw joined cycle)
/// and compared up to rotation; a disagreement throws.
inline CyclicWord joined_transformed_sequence(unsigned k) {
  const F2Poly t = trinomial(k);
  detail::require_primitive(t, "joined_transformed_sequence");
  const CyclicWord direct = JoinedLfsr(t, JoinMode::reversed_complemented).cycle();

  const CyclicWord raw = cycle_join(t).cycle();
  const CyclicWord transformed(complement(reverse(raw.linear())), k);
  if (!equal_up_to_rotation(direct, transformed))
    throw consistency_error("joined_transformed_sequence: recurrence and transformed cycle disagree at k = " +
                            std::to_string(k));
  return direct;
}

}  // namespace chir
