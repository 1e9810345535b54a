// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file test_chern.cpp
 * @brief Twisting, shifting, dualizing, integrality, and Bogomolov tests.
 */

#include <walllab/chern.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using walllab::ChernCharacter;
using walllab::Rat;

namespace {
ChernCharacter ch(int a, int b, const Rat& c, const Rat& d) {
  return ChernCharacter{Rat(a), Rat(b), c, d};
}
}  // namespace

TEST_CASE("twist matches the truncated exponential action", "[chern][twist]") {
  // e^{-H} applied to ch(O(1)) gives ch(O).
  CHECK(walllab::twist(ch(1, 1, Rat(1, 2), Rat(1, 6)), Rat(1)) == ch(1, 0, Rat(0), Rat(0)));
  // Identity at beta = 0.
  const ChernCharacter v = ch(2, 0, Rat(-1), Rat(0));
  CHECK(walllab::twist(v, Rat(0)) == v);
  // Term-by-term power-series product.
  CHECK(walllab::twist(ch(2, 0, Rat(-1), Rat(0)), Rat(-1)) == ch(2, 2, Rat(0), Rat(-2, 3)));
}

TEST_CASE("twist is a group action preserving ch0", "[chern][twist][property]") {
  auto g = walllab::testutil::rng(21);
  for (int i = 0; i < 300; ++i) {
    const ChernCharacter v = walllab::testutil::random_char(g);
    const Rat b1 = walllab::testutil::random_rat(g);
    const Rat b2 = walllab::testutil::random_rat(g);
    CHECK(walllab::twist(walllab::twist(v, b1), b2) == walllab::twist(v, b1 + b2));
    CHECK(walllab::twist(v, b1).ch0 == v.ch0);
  }
}

TEST_CASE("shift negates on odd n and fixes on even n", "[chern][shift]") {
  CHECK(walllab::shift(ch(2, 0, Rat(-1), Rat(0)), 1) == ch(-2, 0, Rat(1), Rat(0)));
  const ChernCharacter v = ch(3, -1, Rat(5, 2), Rat(-7, 6));
  CHECK(walllab::shift(v, 2) == v);
  CHECK(walllab::shift(v, 0) == v);
  CHECK(walllab::shift(v, 1) == -v);
  CHECK(walllab::shift(v, -1) == -v);
  CHECK(walllab::shift(v, 3) == -v);
}

TEST_CASE("dual_shift2 flips odd components and is an involution", "[chern][dual]") {
  CHECK(walllab::dual_shift2(ch(1, 1, Rat(1, 2), Rat(1, 6))) ==
        ch(1, -1, Rat(1, 2), Rat(-1, 6)));
  // v = (-R, 0, D, 0) is self-dual.
  for (int R = 0; R <= 3; ++R) {
    const ChernCharacter v = ch(-R, 0, Rat(R + 1), Rat(0));
    CHECK(walllab::dual_shift2(v) == v);
  }
  CHECK(walllab::dual_shift2(ChernCharacter{Rat(0), Rat(-1), Rat(5, 2), Rat(-1, 6)}) ==
        ChernCharacter{Rat(0), Rat(1), Rat(5, 2), Rat(1, 6)});

  auto g = walllab::testutil::rng(22);
  for (int i = 0; i < 300; ++i) {
    const ChernCharacter v = walllab::testutil::random_char(g);
    CHECK(walllab::dual_shift2(walllab::dual_shift2(v)) == v);
  }
}

TEST_CASE("integrality_beta0 encodes the three integer conditions", "[chern][integrality]") {
  CHECK(walllab::integrality_beta0(ChernCharacter{Rat(0), Rat(1), Rat(3, 2), Rat(7, 6)}));
  CHECK_FALSE(walllab::integrality_beta0(ChernCharacter{Rat(0), Rat(1), Rat(1), Rat(1, 6)}));
  for (int r = -5; r <= 5; ++r) {
    CHECK(walllab::integrality_beta0(ChernCharacter{Rat(r), Rat(3), Rat(3, 2), Rat(1, 2)}));
  }
  // Line bundles O(n) are integral for every n.
  for (int n = -4; n <= 4; ++n) {
    const Rat nn(n);
    CHECK(walllab::integrality_beta0(
        ChernCharacter{Rat(1), nn, nn * nn / 2, nn * nn * nn / 6}));
  }
}

TEST_CASE("integrality_beta0 is invariant under dual_shift2", "[chern][integrality][property]") {
  auto g = walllab::testutil::rng(23);
  for (int i = 0; i < 500; ++i) {
    // Sample on the natural lattice: ch0, ch1 integers, ch2 halves, ch3 sixths.
    std::uniform_int_distribution<int> small(-6, 6);
    const ChernCharacter v{Rat(small(g)), Rat(small(g)), Rat(small(g), 2), Rat(small(g), 6)};
    CHECK(walllab::integrality_beta0(v) == walllab::integrality_beta0(walllab::dual_shift2(v)));
  }
}

TEST_CASE("bogomolov inequality", "[chern][bogomolov]") {
  CHECK(walllab::bogomolov(ch(2, 0, Rat(-1), Rat(0))));
  CHECK_FALSE(walllab::bogomolov(ch(1, 0, Rat(1), Rat(0))));
  // Line-bundle equality case: 1 - 1 = 0.
  CHECK(walllab::bogomolov(ch(1, 1, Rat(1, 2), Rat(1, 6))));
}

TEST_CASE("component access and arithmetic", "[chern][arith]") {
  const ChernCharacter v = ch(1, 2, Rat(3, 2), Rat(-1, 6));
  CHECK(v[0] == Rat(1));
  CHECK(v[1] == Rat(2));
  CHECK(v[2] == Rat(3, 2));
  CHECK(v[3] == Rat(-1, 6));
  CHECK_THROWS_AS(v[4], std::out_of_range);
  CHECK_THROWS_AS(v[-1], std::out_of_range);

  const ChernCharacter w = ch(0, 1, Rat(1, 2), Rat(1, 2));
  CHECK(v + w == ch(1, 3, Rat(2), Rat(1, 3)));
  CHECK(v - w == ch(1, 1, Rat(1), Rat(-2, 3)));
  CHECK(Rat(3) * w == ch(0, 3, Rat(3, 2), Rat(3, 2)));
  CHECK(walllab::to_string(v) == "(1, 2, 3/2, -1/6)");
  CHECK(walllab::lex_less(w, v));
  CHECK_FALSE(walllab::lex_less(v, v));
}
