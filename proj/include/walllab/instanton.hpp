// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file instanton.hpp
 * @brief Rank-2 instanton characters on P^3 and the monad-wall cross-checks.
 *
 * A rank-2 instanton sheaf of charge c has ch(E) = (2, 0, -c, 0); its monad
 * kernel K satisfies ch(K[1]) = (-2-c, c, c/2, c/6), whose wall constant is
 * (c/6)/c = 1/6 for every charge — the monad wall (6s+1) alpha^2 = 1 in the
 * slice, i.e. (s + 1/6) alpha^2 = 1/6. The cross-check confirms that the
 * kernel character reappears in the w = 1/6 family of the generic
 * enumeration for v = (-2, 0, c, 0).
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/walls.hpp>

namespace walllab {

/// ch(E) = (2, 0, -c, 0) for a rank-2 instanton sheaf of charge c >= 1.
inline ChernCharacter instanton_char(long c) {
  if (c < 1) throw std::invalid_argument("instanton charge must be >= 1");
  return ChernCharacter{Rat(2), Rat(0), Rat(-c), Rat(0)};
}

/// ch(K[1]) = (-2-c, c, c/2, c/6) for the monad kernel of charge c >= 1.
inline ChernCharacter kernel_char(long c) {
  if (c < 1) throw std::invalid_argument("instanton charge must be >= 1");
  return ChernCharacter{Rat(-2 - c), Rat(c), Rat(c, 2), Rat(c, 6)};
}

/// The monad wall (6s+1) alpha^2 = 1 solved for alpha^2: 1/(6s+1), s > 0.
inline Rat monad_wall_alpha2(const Rat& s) {
  if (s <= 0) throw std::invalid_argument("monad_wall_alpha2: s > 0 required");
  return Rat(1) / (6 * s + 1);
}

/**
 * True iff kernel_char(c) appears as a member of the w = 1/6 family of
 * enumerate(2, c) (rank coordinate included); holds for c = 1, 2 by the
 * worked examples and is expected for all charges.
 */
inline bool monad_crosscheck(long c) {
  const ChernCharacter k = kernel_char(c);
  for (const WallFamily& fam : enumerate(2, Rat(c))) {
    if (fam.wall_constant != Rat(1, 6)) continue;
    for (const WallCandidate& m : fam.members) {
      if (m.sub == k) return true;
    }
    return false;
  }
  return false;
}

/**
 * Gieseker comparison of 1-dimensional slopes for the outermost chamber:
 * for A = (0, 0, d, x) inside E = (0, 0, D, S), returns x/d <= S/D.
 *
 * @throws std::invalid_argument unless both characters have the required
 *         torsion shape with positive degree.
 */
inline bool gieseker_outer_check(const ChernCharacter& A, const ChernCharacter& E) {
  if (A.ch0 != 0 || A.ch1 != 0 || A.ch2 <= 0) {
    throw std::invalid_argument("gieseker_outer_check: A must be (0, 0, d, x) with d > 0");
  }
  if (E.ch0 != 0 || E.ch1 != 0 || E.ch2 <= 0) {
    throw std::invalid_argument("gieseker_outer_check: E must be (0, 0, D, S) with D > 0");
  }
  return A.ch3 / A.ch2 <= E.ch3 / E.ch2;
}

}  // namespace walllab
