// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chir/errors.hpp"

namespace chir {

/// Polynomial over GF(2) packed into a machine word: bit i is the coefficient
/// of x^i. Degrees up to 63.
class F2Poly {
 public:
  constexpr F2Poly() = default;
  explicit constexpr F2Poly(std::uint64_t bits) : bits_(bits) {}

  /// Accepts caret notation ("x^4+x+1") or a hex bitmask ("0x13").
  static F2Poly parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    detail::require(!s.empty(), "F2Poly::parse: empty polynomial");

    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
      std::uint64_t bits = 0;
      detail::require(s.size() <= 18, "F2Poly::parse: hex mask wider than 64 bits");
      for (std::size_t i = 2; i < s.size(); ++i) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
        int digit = -1;
        if (c >= '0' && c <= '9') digit = c - '0';
        if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        detail::require(digit >= 0, "F2Poly::parse: bad hex digit");
        bits = (bits << 4) | static_cast<std::uint64_t>(digit);
      }
      return F2Poly(bits);
    }

    std::uint64_t bits = 0;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t plus = s.find('+', pos);
      const std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
      unsigned exponent = 0;
      if (term == "1") {
        exponent = 0;
      } else if (term == "x") {
        exponent = 1;
      } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
        exponent = 0;
        for (std::size_t i = 2; i < term.size(); ++i) {
          detail::require(std::isdigit(static_cast<unsigned char>(term[i])) != 0, "F2Poly::parse: bad exponent");
          exponent = exponent * 10 + static_cast<unsigned>(term[i] - '0');
          detail::require(exponent < 64, "F2Poly::parse: degree above 63");
        }
      } else {
        throw contract_error("F2Poly::parse: bad term '" + term + "'");
      }
      const std::uint64_t bit = std::uint64_t{1} << exponent;
      detail::require((bits & bit) == 0, "F2Poly::parse: repeated term");
      bits |= bit;
      if (plus == std::string::npos) break;
      pos = plus + 1;
    }
    return F2Poly(bits);
  }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return bits_ == 0; }
  /// -1 for the zero polynomial.
  [[nodiscard]] constexpr int degree() const noexcept { return static_cast<int>(std::bit_width(bits_)) - 1; }
  [[nodiscard]] constexpr bool coefficient(unsigned i) const noexcept { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  [[nodiscard]] constexpr int weight() const noexcept { return std::popcount(bits_); }

  /// Coefficients c_0..c_{k-1} of a degree-k polynomial: the LFSR taps.
  [[nodiscard]] constexpr std::uint64_t taps() const noexcept {
    const int k = degree();
    return k <= 0 ? 0 : bits_ & ((std::uint64_t{1} << k) - 1);
  }

  [[nodiscard]] std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (!coefficient(static_cast<unsigned>(i))) continue;
      if (!out.empty()) out += '+';
      if (i == 0) out += '1';
      else if (i == 1) out += 'x';
      else out += "x^" + std::to_string(i);
    }
    return out;
  }

  [[nodiscard]] std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string digits;
    std::uint64_t v = bits_;
    do {
      digits.insert(digits.begin(), kDigits[v & 0xF]);
      v >>= 4;
    } while (v != 0);
    return "0x" + digits;
  }

  friend constexpr bool operator==(F2Poly, F2Poly) = default;

 private:
  std::uint64_t bits_ = 0;
};

inline F2Poly poly_mod(F2Poly a, F2Poly m) {
  detail::require(!m.is_zero(), "poly_mod: zero modulus");
  std::uint64_t r = a.bits();
  const int dm = m.degree();
  for (int d = static_cast<int>(std::bit_width(r)) - 1; d >= dm; d = static_cast<int>(std::bit_width(r)) - 1)
    r ^= m.bits() << (d - dm);
  return F2Poly(r);
}

/// (a * b) mod m.
inline F2Poly poly_mul_mod(F2Poly a, F2Poly b, F2Poly m) {
  detail::require(!m.is_zero(), "poly_mul_mod: zero modulus");
  const int dm = m.degree();
  if (dm == 0) return F2Poly(0);
  const std::uint64_t top = std::uint64_t{1} << dm;
  std::uint64_t x = poly_mod(a, m).bits();
  std::uint64_t y = poly_mod(b, m).bits();
  std::uint64_t acc = 0;
  while (y != 0) {
    if (y & 1U) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= m.bits();
  }
  return F2Poly(acc);
}

inline F2Poly poly_pow_mod(F2Poly base, std::uint64_t e, F2Poly m) {
  F2Poly result = poly_mod(F2Poly(1), m);
  F2Poly b = poly_mod(base, m);
  while (e != 0) {
    if (e & 1U) result = poly_mul_mod(result, b, m);
    b = poly_mul_mod(b, b, m);
    e >>= 1;
  }
  return result;
}

inline F2Poly poly_gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    const F2Poly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

/// Rabin-style test: C has no factor of degree d <= k/2 iff
/// gcd(x^(2^d) - x mod C, C) = 1 for every such d.
inline bool is_irreducible(F2Poly c) {
  const int k = c.degree();
  detail::require(k >= 1, "is_irreducible: degree must be at least 1");
  if (k == 1) return true;
  const F2Poly x(2);
  F2Poly power = x;  // x^(2^d) mod C
  for (int d = 1; d <= k / 2; ++d) {
    power = poly_mul_mod(power, power, c);
    const F2Poly diff(power.bits() ^ poly_mod(x, c).bits());
    if (poly_gcd(c, diff).degree() != 0) return false;
  }
  return true;
}

namespace detail {

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using wide = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<wide>(a) * b % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mul_mod_u64(r, a, m);
    a = mul_mod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultTrialBudget = std::uint64_t{1} << 22;

/// Distinct prime factors by trial division. A cofactor that is itself prime
/// ends the search early; anything else past `trial_budget` divisors is
/// reported as undecided.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n, std::uint64_t trial_budget = kDefaultTrialBudget) {
  std::vector<std::uint64_t> factors;
  std::uint64_t tried = 0;
  for (std::uint64_t p = 2; n > 1; p += (p == 2 ? 1 : 2)) {
    if (detail::is_prime_u64(n)) {
      factors.push_back(n);
      break;
    }
    if (p > n / p) {
      factors.push_back(n);
      break;
    }
    if (++tried > trial_budget)
      throw undecided_error("prime_factors: trial-division budget exhausted on cofactor " + std::to_string(n));
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return factors;
}

/// C is primitive iff it is irreducible and x has order exactly 2^k - 1 modulo C.
inline bool is_primitive(F2Poly c, std::uint64_t trial_budget = kDefaultTrialBudget) {
  const int k = c.degree();
  detail::require(k >= 2, "is_primitive: degree must be at least 2");
  if (!is_irreducible(c)) return false;
  const std::uint64_t order = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const F2Poly x(2);
  if (poly_pow_mod(x, order, c) != F2Poly(1)) return false;
  for (std::uint64_t p : prime_factors(order, trial_budget))
    if (poly_pow_mod(x, order / p, c) == F2Poly(1)) return false;
  return true;
}

/// x^k + x + 1.
inline F2Poly trinomial(unsigned k) {
  detail::require(k >= 2 && k <= 63, "trinomial: degree must lie in [2, 63]");
  return F2Poly((std::uint64_t{1} << k) | 0b11U);
}

/// x^k C(1/x): coefficient reversal. Requires c_0 = 1 so the degree is kept.
inline F2Poly reciprocal(F2Poly c) {
  detail::require(!c.is_zero() && c.coefficient(0), "reciprocal: constant term must be 1");
  const int k = c.degree();
  std::uint64_t out = 0;
  for (int i = 0; i <= k; ++i)
    if (c.coefficient(static_cast<unsigned>(i))) out |= std::uint64_t{1} << (k - i);
  return F2Poly(out);
}

/// Degrees k in [2, k_max] for which x^k + x + 1 is primitive.
inline std::vector<unsigned> primitive_trinomial_degrees(unsigned k_max,
                                                         std::uint64_t trial_budget = kDefaultTrialBudget) {
  std::vector<unsigned> out;
  for (unsigned k = 2; k <= k_max; ++k)
    if (is_primitive(trinomial(k), trial_budget)) out.push_back(k);
  return out;
}

}  // namespace chir
