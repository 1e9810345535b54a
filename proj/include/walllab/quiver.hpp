// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file quiver.hpp
 * @brief The innermost-chamber analysis: dimension vectors over the
 *        exceptional-collection heart and the theta_{alpha,s} weight.
 *
 * Inside the region (6s+1) alpha^2 < 1 the relevant heart is generated by
 * the exceptional collection O(-2)[3], O(-1)[2], O[1], O(1). An object is
 * recorded by its dimension vector (n_-3, n_-2, n_-1, n_0) of multiplicities
 * of those four generators. The weight
 *
 *   theta_{alpha,s} = (8 - 2t, -1 + t, 0, 1 - t),   t := (6s+1) alpha^2,
 *
 * pairs to zero against n(E) for E = (-R, 0, D, 0) (the lambda(E) = 0
 * normalization), and pairs to 1 - t > 0 against the forced subcomplex
 * O(1) = (0,0,0,1) strictly inside the region, so the moduli space is empty
 * there: the region is wall-free and the monad wall (6s+1) alpha^2 = 1 is
 * the last wall.
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/stability.hpp>

#include <array>
#include <optional>
#include <string>

namespace walllab {

/// Multiplicities (n_-3, n_-2, n_-1, n_0) of the heart's generators
/// O(-2)[3], O(-1)[2], O[1], O(1); componentwise >= 0.
struct DimensionVector {
  Int n_m3;
  Int n_m2;
  Int n_m1;
  Int n_0;
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

inline std::string to_string(const DimensionVector& n) {
  return "(" + n.n_m3.str() + ", " + n.n_m2.str() + ", " + n.n_m1.str() + ", " +
         n.n_0.str() + ")";
}

/// The weight theta_{alpha,s} = (8-2t, -1+t, 0, 1-t) with t = (6s+1) alpha^2.
struct ThetaWeight {
  Rat w_m3;
  Rat w_m2;
  Rat w_m1;
  Rat w_0;
  friend bool operator==(const ThetaWeight&, const ThetaWeight&) = default;
};

/// Characters of the heart's generators, in dimension-vector slot order:
/// ch(O(-2)[3]), ch(O(-1)[2]), ch(O[1]), ch(O(1)).
inline std::array<ChernCharacter, 4> heart_generators() {
  return {ChernCharacter{Rat(-1), Rat(2), Rat(-2), Rat(4, 3)},
          ChernCharacter{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 6)},
          ChernCharacter{Rat(-1), Rat(0), Rat(0), Rat(0)},
          ChernCharacter{Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)}};
}

/// Linear combination of the generator characters; inverse of dim_vector.
inline ChernCharacter chern_from_dims(const DimensionVector& n) {
  const std::array<ChernCharacter, 4> g = heart_generators();
  return Rat(n.n_m3) * g[0] + Rat(n.n_m2) * g[1] + Rat(n.n_m1) * g[2] + Rat(n.n_0) * g[3];
}

/**
 * Solves v = n_-3 ch(O(-2)[3]) + n_-2 ch(O(-1)[2]) + n_-1 ch(O[1]) + n_0 ch(O(1))
 * for the multiplicities. The 4x4 system is invertible; in closed form
 *
 *   n_-3 = v3 - v1/6,
 *   n_-2 = v2 + 3 v3 - v1,
 *   n_-1 = -v0 + 2 v2 + 3 v3 - v1/2,
 *   n_0  = v1/3 + v2 + v3.
 *
 * In particular (-R, 0, D, 0) maps to (0, D, 2D + R, D).
 *
 * @throws std::domain_error ("not in heart") if any component is negative
 *         or not an integer.
 */
inline DimensionVector dim_vector(const ChernCharacter& v) {
  const std::array<Rat, 4> sol = {
      v.ch3 - v.ch1 / 6,
      v.ch2 + 3 * v.ch3 - v.ch1,
      -v.ch0 + 2 * v.ch2 + 3 * v.ch3 - v.ch1 / 2,
      v.ch1 / 3 + v.ch2 + v.ch3,
  };
  for (const Rat& x : sol) {
    if (!is_integer(x) || x < 0) {
      throw std::domain_error("not in heart: dimension vector solution " + format_rat(sol[0]) +
                              ", " + format_rat(sol[1]) + ", " + format_rat(sol[2]) + ", " +
                              format_rat(sol[3]) + " leaves the nonnegative integer cone");
    }
  }
  const DimensionVector n{rat_floor(sol[0]), rat_floor(sol[1]), rat_floor(sol[2]),
                          rat_floor(sol[3])};
  if (chern_from_dims(n) != v) {
    throw std::logic_error("dim_vector: closed-form solution failed the round-trip check");
  }
  return n;
}

/// theta_{alpha,s} at a slice point.
inline ThetaWeight theta(const SlicePoint& p) {
  const Rat t = (6 * p.s() + 1) * p.alpha_sq();
  return ThetaWeight{8 - 2 * t, -1 + t, Rat(0), 1 - t};
}

/// Pairing of a weight against a dimension vector.
inline Rat theta_pair(const ThetaWeight& th, const DimensionVector& n) {
  return th.w_m3 * Rat(n.n_m3) + th.w_m2 * Rat(n.n_m2) + th.w_m1 * Rat(n.n_m1) +
         th.w_0 * Rat(n.n_0);
}

/// Pairing against an arbitrary rational quadruple in slot order
/// (n_-3, n_-2, n_-1, n_0); used where the multiplicities are symbolic.
inline Rat theta_pair(const ThetaWeight& th, const std::array<Rat, 4>& n) {
  return th.w_m3 * n[0] + th.w_m2 * n[1] + th.w_m1 * n[2] + th.w_0 * n[3];
}

/// Where a slice point sits relative to the monad wall (6s+1) alpha^2 = 1.
enum class RegionZone { inside, on_wall, outside };

/// Emptiness verdict for the character (-R, 0, D, 0) at a slice point.
struct RegionVerdict {
  RegionZone zone;
  Rat t;                                 ///< (6s+1) alpha^2
  std::string label;                     ///< short form, e.g. "inside: moduli empty"
  std::string message;                   ///< full verdict text
  ThetaWeight weight;                    ///< theta at the slice point
  Rat theta_pair_E;                      ///< theta . (0, D, 2D+R, D), always 0
  Rat theta_pair_O1;                     ///< theta . (0, 0, 0, 1) = 1 - t
  std::optional<DimensionVector> dims;   ///< n(E) when it is integral (D in Z)
};

/**
 * Classifies the slice point against the monad wall and reports the
 * theta-pairing evidence: strictly inside (6s+1) alpha^2 < 1 the moduli
 * space is empty because O(1) is forced as a subcomplex and pairs
 * positively; on the wall all subcomplex walls coincide (ch1 = 6 ch3);
 * outside, the quiver description no longer applies.
 *
 * @throws std::invalid_argument via validation of (R, D);
 *         std::logic_error if the zero-pairing normalization fails.
 */
inline RegionVerdict region_verdict(long R, const Rat& D, const SlicePoint& p) {
  if (R < 0) throw std::invalid_argument("rank parameter R must be >= 0");
  if (D <= 0) throw std::invalid_argument("degree parameter D must be > 0");
  if (!is_integer(2 * D)) {
    throw std::invalid_argument("degree parameter D must be a half-integer (2D in Z)");
  }

  RegionVerdict out;
  out.t = (6 * p.s() + 1) * p.alpha_sq();
  out.weight = theta(p);
  out.theta_pair_E =
      theta_pair(out.weight, std::array<Rat, 4>{Rat(0), D, 2 * D + R, D});
  out.theta_pair_O1 = theta_pair(out.weight, DimensionVector{0, 0, 0, 1});

  if (out.theta_pair_E != 0) {
    throw std::logic_error("region_verdict: theta pairing against n(E) must vanish");
  }
  const ChernCharacter v{Rat(-R), Rat(0), D, Rat(0)};
  if (is_integer(D)) {
    out.dims = dim_vector(v);
  }

  if (out.t < 1) {
    out.zone = RegionZone::inside;
    out.label = "inside: moduli empty";
    out.message =
        "inside quiver region: wall-free; moduli empty (forced O(1) subcomplex with "
        "positive theta-pairing " +
        format_rat(out.theta_pair_O1) + " > 0)";
  } else if (out.t == 1) {
    out.zone = RegionZone::on_wall;
    out.label = "on monad wall";
    out.message =
        "on monad wall (6s+1)alpha^2 = 1; all subcomplex walls coincide here (ch1 = 6 ch3)";
  } else {
    out.zone = RegionZone::outside;
    out.label = "outside";
    out.message = "outside the quiver region: the exceptional-collection heart no longer "
                  "describes the slice point";
  }
  return out;
}

}  // namespace walllab
