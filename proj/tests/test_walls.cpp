// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file test_walls.cpp
 * @brief Wall enumeration: oracle tables, filters, duality, and determinism.
 */

#include <walllab/walls.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>

#include "test_util.hpp"

using walllab::ChernCharacter;
using walllab::FamilyRow;
using walllab::Rat;
using walllab::RankRange;
using walllab::WallFamily;

namespace {

FamilyRow row(const Rat& c, const Rat& d, const Rat& e, long lo, long hi) {
  return FamilyRow{c, d, e, RankRange{walllab::Int(lo), walllab::Int(hi)}};
}

}  // namespace

TEST_CASE("enumerate(2, 1): the single instanton-side family", "[walls][oracle]") {
  const auto fams = walllab::enumerate(2, Rat(1));
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].wall_constant == Rat(1, 6));
  CHECK(fams[0].alpha0_sq == Rat(1));
  CHECK(fams[0].members.size() == 5);
  const auto rows = walllab::family_rows(fams[0]);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == row(Rat(1), Rat(1, 2), Rat(1, 6), -3, 1));
  // Spot-check the first member completely.
  const auto& m = fams[0].members.front();
  CHECK(m.sub == ChernCharacter{Rat(-3), Rat(1), Rat(1, 2), Rat(1, 6)});
  CHECK(m.quot == ChernCharacter{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 6)});
  CHECK(m.rank_range == RankRange{walllab::Int(-3), walllab::Int(1)});
  CHECK(m.annotation.empty());
}

TEST_CASE("enumerate(2, 2): three rows on one wall", "[walls][oracle]") {
  const auto fams = walllab::enumerate(2, Rat(2));
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].wall_constant == Rat(1, 6));
  const auto rows = walllab::family_rows(fams[0]);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == row(Rat(1), Rat(1, 2), Rat(1, 6), -5, 1));
  CHECK(rows[1] == row(Rat(1), Rat(3, 2), Rat(1, 6), -3, 3));
  CHECK(rows[2] == row(Rat(2), Rat(1), Rat(1, 3), -4, 2));
  CHECK(fams[0].members.size() == 21);
}

TEST_CASE("enumerate(0, 3): two families, seven rows", "[walls][oracle]") {
  const auto fams = walllab::enumerate(0, Rat(3));
  REQUIRE(fams.size() == 2);

  CHECK(fams[0].wall_constant == Rat(7, 6));
  CHECK(fams[0].alpha0_sq == Rat(7));
  const auto rows0 = walllab::family_rows(fams[0]);
  REQUIRE(rows0.size() == 1);
  CHECK(rows0[0] == row(Rat(1), Rat(3, 2), Rat(7, 6), 0, 0));
  CHECK(fams[0].members.size() == 1);

  CHECK(fams[1].wall_constant == Rat(1, 6));
  const auto rows1 = walllab::family_rows(fams[1]);
  REQUIRE(rows1.size() == 6);
  CHECK(rows1[0] == row(Rat(1), Rat(1, 2), Rat(1, 6), -5, 1));
  CHECK(rows1[1] == row(Rat(1), Rat(3, 2), Rat(1, 6), -3, 3));
  CHECK(rows1[2] == row(Rat(1), Rat(5, 2), Rat(1, 6), -1, 5));
  CHECK(rows1[3] == row(Rat(2), Rat(1), Rat(1, 3), -4, 2));
  CHECK(rows1[4] == row(Rat(2), Rat(2), Rat(1, 3), -2, 4));
  CHECK(rows1[5] == row(Rat(3), Rat(3, 2), Rat(1, 2), -3, 3));
  CHECK(fams[1].members.size() == 42);
}

TEST_CASE("enumerate input validation", "[walls][errors]") {
  CHECK_THROWS_AS(walllab::enumerate(-1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::enumerate(2, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::enumerate(2, Rat(-2)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::enumerate(2, Rat(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::degenerate_c0(-1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(walllab::max_alpha0(0, Rat(1, 4)), std::invalid_argument);
}

TEST_CASE("candidate invariants hold on larger inputs", "[walls][property]") {
  struct Input {
    long R;
    Rat D;
  };
  for (const Input& in : {Input{1, Rat(7, 2)}, Input{2, Rat(3)}}) {
    const ChernCharacter v{Rat(-in.R), Rat(0), in.D, Rat(0)};
    const auto fams = walllab::enumerate(in.R, in.D);
    REQUIRE_FALSE(fams.empty());
    Rat prev_w;
    bool first = true;
    for (const auto& fam : fams) {
      if (!first) CHECK(fam.wall_constant < prev_w);  // strictly descending
      prev_w = fam.wall_constant;
      first = false;
      CHECK(fam.wall_constant >= Rat(1, 6));
      CHECK(fam.alpha0_sq == 6 * fam.wall_constant);
      CHECK(std::is_sorted(fam.members.begin(), fam.members.end(),
                           walllab::detail::member_less));
      for (const auto& m : fam.members) {
        CHECK(m.sub + m.quot == v);
        CHECK(m.sub.ch1 >= 1);
        CHECK(m.sub.ch2 > 0);
        CHECK(m.sub.ch2 < in.D);
        CHECK(m.sub.ch3 > 0);
        CHECK(m.sub.ch3 / m.sub.ch1 == fam.wall_constant);
        CHECK(walllab::integrality_beta0(m.sub));
        CHECK(m.rank_range.lo <= walllab::rat_floor(m.sub.ch0));
        CHECK(walllab::rat_floor(m.sub.ch0) <= m.rank_range.hi);
        // Numerical bound (b).
        const Rat cap = std::min(Rat(4 * m.sub.ch2 * m.sub.ch2),
                                 Rat(4 * (in.D - m.sub.ch2) * (in.D - m.sub.ch2)));
        CHECK(6 * m.sub.ch1 * m.sub.ch3 <= cap);
        // Endpoint support-property filters, recomputed through q_form.
        for (const Rat& a : {Rat(0), fam.alpha0_sq}) {
          CHECK(walllab::q_form(m.sub, m.sub, a, Rat(1), Rat(0)) >= 0);
          CHECK(walllab::q_form(m.quot, m.quot, a, Rat(1), Rat(0)) >= 0);
        }
      }
    }
    // Duality: an involution preserving w for every D; for integer D the
    // dual family is again an enumerated family (the d -> D - d reflection
    // leaves the d - c^2/2 integrality class only when D is an integer).
    for (const auto& fam : fams) {
      const WallFamily dual = walllab::dual_family(fam, in.R, in.D);
      CHECK(dual.wall_constant == fam.wall_constant);
      CHECK(walllab::dual_family(dual, in.R, in.D) == fam);
      if (walllab::is_integer(in.D)) {
        const auto it = std::find_if(fams.begin(), fams.end(), [&](const WallFamily& g) {
          return g.wall_constant == dual.wall_constant;
        });
        REQUIRE(it != fams.end());
        CHECK(dual == *it);
      }
    }
  }
}

TEST_CASE("destabilizer slope meets lambda(E) on the wall curve", "[walls][property]") {
  const auto fams = walllab::enumerate(2, Rat(1));
  REQUIRE(fams.size() == 1);
  const auto pts = walllab::wall_curve_samples(fams[0].wall_constant,
                                               {Rat(1, 4), Rat(1, 2), Rat(3, 4)});
  for (const auto& m : fams[0].members) {
    for (const auto& p : pts) {
      if (walllab::rho(m.sub, p, Rat(0)) == 0) continue;  // sentinel point
      CHECK(walllab::lambda(m.sub, p, Rat(0)) == walllab::SlopeValue{Rat(0)});
    }
  }
}

TEST_CASE("dual_family matches the documented pairings", "[walls][dual]") {
  // R = 0, D = 3: (1, 1/2, 1/6)[-5, 1] <-> (1, 5/2, 1/6)[-1, 5].
  const auto fams3 = walllab::enumerate(0, Rat(3));
  const WallFamily& inner = fams3[1];
  const WallFamily dual3 = walllab::dual_family(inner, 0, Rat(3));
  const auto rows3 = walllab::family_rows(dual3);
  REQUIRE(rows3.size() == 6);
  CHECK(rows3[0] == row(Rat(1), Rat(1, 2), Rat(1, 6), -5, 1));
  CHECK(rows3[2] == row(Rat(1), Rat(5, 2), Rat(1, 6), -1, 5));
  CHECK(dual3 == inner);  // the family as a whole is self-dual

  // R = 2, D = 2: (1, 1/2, 1/6) <-> (1, 3/2, 1/6); (2, 1, 1/3) self-paired.
  const auto fams2 = walllab::enumerate(2, Rat(2));
  const WallFamily dual2 = walllab::dual_family(fams2[0], 2, Rat(2));
  CHECK(dual2 == fams2[0]);
  // Check one member's image explicitly: sub (-5, 1, 1/2, 1/6) has quotient
  // (3, -1, 3/2, -1/6), whose shifted dual is (3, 1, 3/2, 1/6).
  const ChernCharacter a{Rat(-5), Rat(1), Rat(1, 2), Rat(1, 6)};
  const auto it = std::find_if(fams2[0].members.begin(), fams2[0].members.end(),
                               [&](const auto& m) { return m.sub == a; });
  REQUIRE(it != fams2[0].members.end());
  CHECK(walllab::dual_shift2(it->quot) == ChernCharacter{Rat(3), Rat(1), Rat(3, 2), Rat(1, 6)});

  // Corrupted input is rejected.
  WallFamily bad = fams2[0];
  bad.members[0].quot.ch0 += 1;
  CHECK_THROWS_AS(walllab::dual_family(bad, 2, Rat(2)), std::logic_error);
}

TEST_CASE("degenerate candidates", "[walls][degenerate]") {
  const auto d21 = walllab::degenerate_c0(2, Rat(1));
  REQUIRE(d21.size() == 4);
  CHECK(d21[0].sub == ChernCharacter{Rat(-2), Rat(0), Rat(0), Rat(0)});
  CHECK(d21[1].sub == ChernCharacter{Rat(-1), Rat(0), Rat(0), Rat(0)});
  CHECK(d21[2].sub == ChernCharacter{Rat(-1), Rat(0), Rat(1), Rat(0)});
  CHECK(d21[3].sub == ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(d21[0].note == std::string(walllab::kDegenerateNote));

  CHECK(walllab::degenerate_c0(2, Rat(2)).size() == 7);

  const auto d03 = walllab::degenerate_c0(0, Rat(3));
  REQUIRE(d03.size() == 2);
  CHECK(d03[0].sub == ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(0)});
  CHECK(d03[1].sub == ChernCharacter{Rat(0), Rat(0), Rat(2), Rat(0)});

  CHECK(walllab::degenerate_c0(0, Rat(1)).empty());
}

TEST_CASE("wall_curve_samples", "[walls][curve]") {
  const auto pts = walllab::wall_curve_samples(Rat(1, 6), {Rat(1, 2)});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].alpha_sq() == Rat(1, 2));
  CHECK(pts[0].s() == Rat(1, 6));

  const auto pts7 = walllab::wall_curve_samples(Rat(7, 6), {Rat(7, 2), Rat(1)});
  CHECK(pts7[0].s() == Rat(1, 6));
  CHECK(pts7[1].s() == Rat(1));

  CHECK_THROWS_AS(walllab::wall_curve_samples(Rat(1, 6), {Rat(1)}), std::domain_error);
  CHECK_THROWS_AS(walllab::wall_curve_samples(Rat(1, 6), {Rat(0)}), std::domain_error);
  CHECK_THROWS_AS(walllab::wall_curve_samples(Rat(1, 6), {Rat(-1, 2)}), std::domain_error);
  CHECK_THROWS_AS(walllab::wall_curve_samples(Rat(0), {Rat(1, 2)}), std::domain_error);
  CHECK_THROWS_AS(walllab::wall_curve_samples(Rat(-1), {Rat(1, 2)}), std::domain_error);
}

TEST_CASE("enumeration output is independent of the thread count", "[walls][threads]") {
  setenv("WALLLAB_THREADS", "1", 1);
  const auto serial = walllab::enumerate(2, Rat(3));
  setenv("WALLLAB_THREADS", "8", 1);
  const auto parallel = walllab::enumerate(2, Rat(3));
  unsetenv("WALLLAB_THREADS");
  CHECK(serial == parallel);
  CHECK(serial == walllab::enumerate(2, Rat(3)));
}

TEST_CASE("max_alpha0", "[walls][alpha0]") {
  const auto a22 = walllab::max_alpha0(2, Rat(2));
  CHECK(a22.has_walls);
  CHECK(a22.alpha0_sq == Rat(1));
  CHECK(a22.n_min == 2);

  const auto a03 = walllab::max_alpha0(0, Rat(3));
  CHECK(a03.has_walls);
  CHECK(a03.alpha0_sq == Rat(7));
  CHECK(a03.n_min == 3);

  const auto a21 = walllab::max_alpha0(2, Rat(1));
  CHECK(a21.has_walls);
  CHECK(a21.alpha0_sq == Rat(1));
  CHECK(a21.n_min == 2);

  // D = 1/2 has an empty d-grid: no walls at all.
  const auto none = walllab::max_alpha0(1, Rat(1, 2));
  CHECK_FALSE(none.has_walls);
  CHECK(none.alpha0_sq == Rat(0));
  CHECK(none.n_min == 1);
  CHECK(walllab::enumerate(1, Rat(1, 2)).empty());
}
