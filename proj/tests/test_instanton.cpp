// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file test_instanton.cpp
 * @brief Instanton characters, the monad wall, and enumeration cross-checks.
 */

#include <walllab/instanton.hpp>

#include <catch2/catch_amalgamated.hpp>

using walllab::ChernCharacter;
using walllab::Rat;

TEST_CASE("instanton and kernel characters", "[instanton][chars]") {
  CHECK(walllab::instanton_char(1) == ChernCharacter{Rat(2), Rat(0), Rat(-1), Rat(0)});
  CHECK(walllab::instanton_char(4) == ChernCharacter{Rat(2), Rat(0), Rat(-4), Rat(0)});
  CHECK(walllab::kernel_char(1) == ChernCharacter{Rat(-3), Rat(1), Rat(1, 2), Rat(1, 6)});
  CHECK(walllab::kernel_char(2) == ChernCharacter{Rat(-4), Rat(2), Rat(1), Rat(1, 3)});
  CHECK_THROWS_AS(walllab::instanton_char(0), std::invalid_argument);
  CHECK_THROWS_AS(walllab::instanton_char(-2), std::invalid_argument);
  CHECK_THROWS_AS(walllab::kernel_char(0), std::invalid_argument);
}

TEST_CASE("kernel wall constant is 1/6 for every charge", "[instanton][wall]") {
  for (long c = 1; c <= 6; ++c) {
    const ChernCharacter k = walllab::kernel_char(c);
    CHECK(k.ch3 / k.ch1 == Rat(1, 6));
    CHECK(walllab::integrality_beta0(k));
    CHECK(walllab::bogomolov(k));
  }
}

TEST_CASE("monad additivity", "[instanton][monad]") {
  // ch(K[1]) + c ch(O(-1)[2]) = ch(E[1]): the monad 0 -> O(-1)^c -> K -> E -> 0.
  const ChernCharacter o_m1_2{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 6)};
  for (long c = 1; c <= 8; ++c) {
    CHECK(walllab::kernel_char(c) + Rat(c) * o_m1_2 ==
          walllab::shift(walllab::instanton_char(c), 1));
  }
}

TEST_CASE("monad_wall_alpha2", "[instanton][wall]") {
  CHECK(walllab::monad_wall_alpha2(Rat(1)) == Rat(1, 7));
  CHECK(walllab::monad_wall_alpha2(Rat(1, 3)) == Rat(1, 3));
  CHECK(walllab::monad_wall_alpha2(Rat(1, 2)) == Rat(1, 4));
  // (6s+1) alpha^2 = 1 along the returned curve.
  for (int k = 1; k <= 12; ++k) {
    const Rat s(k, 4);
    CHECK((6 * s + 1) * walllab::monad_wall_alpha2(s) == 1);
  }
  CHECK_THROWS_AS(walllab::monad_wall_alpha2(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::monad_wall_alpha2(Rat(-1, 2)), std::invalid_argument);
}

TEST_CASE("kernel characters reappear in the generic enumeration", "[instanton][crosscheck]") {
  CHECK(walllab::monad_crosscheck(1));
  CHECK(walllab::monad_crosscheck(2));
  CHECK(walllab::monad_crosscheck(3));
}

TEST_CASE("gieseker_outer_check", "[instanton][gieseker]") {
  CHECK(walllab::gieseker_outer_check(ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(0)},
                                      ChernCharacter{Rat(0), Rat(0), Rat(2), Rat(1)}));
  CHECK_FALSE(walllab::gieseker_outer_check(ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(1)},
                                            ChernCharacter{Rat(0), Rat(0), Rat(2), Rat(1)}));
  // Equality is allowed (non-strict comparison).
  CHECK(walllab::gieseker_outer_check(ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(1, 2)},
                                      ChernCharacter{Rat(0), Rat(0), Rat(2), Rat(1)}));
  CHECK_THROWS_AS(walllab::gieseker_outer_check(ChernCharacter{Rat(1), Rat(0), Rat(1), Rat(0)},
                                                ChernCharacter{Rat(0), Rat(0), Rat(2), Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(walllab::gieseker_outer_check(ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(0)},
                                                ChernCharacter{Rat(0), Rat(0), Rat(0), Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(walllab::gieseker_outer_check(ChernCharacter{Rat(0), Rat(1), Rat(1), Rat(0)},
                                                ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(1)}),
                  std::invalid_argument);
}
