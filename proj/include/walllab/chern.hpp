// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file chern.hpp
 * @brief Chern characters on P^3 in H-power coordinates: twisting, shifting,
 *        dualizing, integrality tests, and the Bogomolov inequality.
 *
 * A character is the quadruple (ch0, ch1, ch2, ch3) of exact rationals,
 * the coefficients against 1, H, H^2, H^3. Characters of honest objects
 * satisfy ch0, ch1 in Z, ch2 in (1/2)Z, ch3 in (1/6)Z, but the type admits
 * arbitrary rationals so that intermediate arithmetic stays total.
 */

#pragma once

#include <walllab/rational.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace walllab {

/// Quadruple of exact rationals; the universal currency of the tool.
/// Characters are additive: an extension's character is the sum of the
/// characters of its factors.
struct ChernCharacter {
  Rat ch0;  ///< rank
  Rat ch1;  ///< degree (coefficient of H)
  Rat ch2;  ///< coefficient of H^2
  Rat ch3;  ///< coefficient of H^3

  const Rat& operator[](int i) const {
    switch (i) {
      case 0: return ch0;
      case 1: return ch1;
      case 2: return ch2;
      case 3: return ch3;
      default: throw std::out_of_range("ChernCharacter index must be 0..3");
    }
  }
  Rat& operator[](int i) {
    return const_cast<Rat&>(static_cast<const ChernCharacter&>(*this)[i]);
  }

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

  friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, a.ch3 + b.ch3};
  }
  friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2, a.ch3 - b.ch3};
  }
  friend ChernCharacter operator-(const ChernCharacter& a) {
    return {-a.ch0, -a.ch1, -a.ch2, -a.ch3};
  }
  friend ChernCharacter operator*(const Rat& k, const ChernCharacter& a) {
    return {k * a.ch0, k * a.ch1, k * a.ch2, k * a.ch3};
  }
};

/// Lexicographic order on (ch0, ch1, ch2, ch3); used for canonical sorting.
inline bool lex_less(const ChernCharacter& a, const ChernCharacter& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// "(p, q, r, s)" display form with lowest-terms entries.
inline std::string to_string(const ChernCharacter& v) {
  return "(" + format_rat(v.ch0) + ", " + format_rat(v.ch1) + ", " + format_rat(v.ch2) +
         ", " + format_rat(v.ch3) + ")";
}

/**
 * Twisted character: multiplication by the series e^{-beta H}, truncated at
 * H^3 on a threefold. Componentwise,
 *
 *   (v0,
 *    v1 - b v0,
 *    v2 - b v1 + b^2/2 v0,
 *    v3 - b v2 + b^2/2 v1 - b^3/6 v0).
 *
 * Twisting is a group action: twist(twist(v,b1),b2) = twist(v,b1+b2).
 */
inline ChernCharacter twist(const ChernCharacter& v, const Rat& beta) {
  const Rat b2 = beta * beta;
  return {v.ch0,
          v.ch1 - beta * v.ch0,
          v.ch2 - beta * v.ch1 + b2 / 2 * v.ch0,
          v.ch3 - beta * v.ch2 + b2 / 2 * v.ch1 - b2 * beta / 6 * v.ch0};
}

/// Character of the homological shift E[n]: ch(E[n]) = (-1)^n ch(E).
inline ChernCharacter shift(const ChernCharacter& v, long n) {
  return (n % 2 == 0) ? v : -v;
}

/// Character of E^dual[2]: component parity ch_i(E^dual) = (-1)^i ch_i(E),
/// followed by the even shift's global sign (-1)^2 = +1.
inline ChernCharacter dual_shift2(const ChernCharacter& v) {
  return {v.ch0, -v.ch1, v.ch2, -v.ch3};
}

/**
 * Integrality of a character at beta = 0 on P^3. The three tests encode that
 * c2, c3 and the Euler characteristic of an honest object are integers:
 *
 *   v2 - v1^2/2            in Z,
 *   2 v3 - v1 v2 + v1^3/6  in Z,
 *   v3 - v1/6              in Z.
 *
 * Each test is stable under dual_shift2 (odd components flip sign together).
 */
inline bool integrality_beta0(const ChernCharacter& v) {
  return is_integer(v.ch2 - v.ch1 * v.ch1 / 2) &&
         is_integer(2 * v.ch3 - v.ch1 * v.ch2 + v.ch1 * v.ch1 * v.ch1 / 6) &&
         is_integer(v.ch3 - v.ch1 / 6);
}

/// Bogomolov inequality v1^2 - 2 v0 v2 >= 0 (necessary for mu-semistability).
inline bool bogomolov(const ChernCharacter& v) {
  return v.ch1 * v.ch1 - 2 * v.ch0 * v.ch2 >= 0;
}

}  // namespace walllab
