// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file walls.hpp
 * @brief Enumeration of numerical candidate destabilizers for the character
 *        v = (-R, 0, D, 0) at beta = 0 on P^3, grouped into wall families.
 *
 * A destabilizing subobject with twisted character (r, c, d, e), c > 0,
 * produces the wall curve (s + 1/6) alpha^2 = e/c in the (alpha, s)-slice.
 * The enumeration returns every lattice point satisfying the full filter
 * set below; candidates are *numerical*: not every numerical solution
 * corresponds to an actual wall, so all output is labeled accordingly and
 * carries a free-form annotation field for externally known status.
 *
 * Filters applied (all exact):
 *   (a) d in (1/2)Z with 0 < d < D;
 *   (b) c in Z, c >= 1; e in (1/6)Z, e > 0; 6ce <= min{4d^2, 4(D-d)^2};
 *   (c) the integrality conditions on (., c, d, e) (r-free);
 *   (d) r in Z with -c(2D-2d)/(6e) - R <= r <= c(2d)/(6e);
 *   (e) endpoint support-property filters with K = 1: Q(sub) >= 0 and
 *       Q(quot) >= 0 at both alpha^2 = 0 and alpha^2 = 6e/c (non-strict;
 *       Q is affine in alpha^2 along the wall, so endpoint nonnegativity
 *       implies it on the whole segment);
 *   (f) endpoint category condition, non-strict at the limit points:
 *       0 <= d - (alpha^2/2) r <= D + (alpha^2/2) R at alpha^2 in {0, 6e/c};
 *   (g) wall constant w = e/c >= 1/6: the innermost wall is the monad wall
 *       (6s+1) alpha^2 = 1, i.e. (s+1/6) alpha^2 = 1/6, and a curve with
 *       w < 1/6 would lie entirely inside the wall-free quiver region
 *       (see quiver.hpp), so such solutions are not walls.
 *
 * Conditions (d) and (f)-at-the-outer-endpoint are algebraically equivalent;
 * the enumerator asserts the equivalence on every candidate and throws
 * std::logic_error if it ever fails (internal-inconsistency exit path).
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/stability.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace walllab {

/// Fixed label attached to every enumerated candidate in all output.
inline constexpr std::string_view kNumericalCandidateLabel = "numerical candidate";

/// Note attached to degenerate (ch1 = 0) candidates.
inline constexpr std::string_view kDegenerateNote =
    "coincides with lambda(E) everywhere (no curve)";

/// Closed integer interval of admissible ranks for a fixed (c, d, e) row.
struct RankRange {
  Int lo;
  Int hi;
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

/// One destabilizer character (r, c, d, e) together with its quotient,
/// wall constant w = e/c, and the rank range of its (c, d, e) row.
struct WallCandidate {
  ChernCharacter sub;        ///< the destabilizer A = (r, c, d, e)
  ChernCharacter quot;       ///< B = v - A
  Rat wall_constant;         ///< w = e/c
  Rat alpha0_sq;             ///< alpha_0^2 = 6 e/c, the s -> 0 intercept
  RankRange rank_range;      ///< admissible r for this (c, d, e)
  std::string annotation;    ///< user-set status ("actual", "vanishing", ...)

  friend bool operator==(const WallCandidate&, const WallCandidate&) = default;
};

/// All candidates sharing one wall constant, i.e. one curve
/// (s + 1/6) alpha^2 = w; members sorted lexicographically by (c, d, e, r).
struct WallFamily {
  Rat wall_constant;
  Rat alpha0_sq;
  std::vector<WallCandidate> members;

  friend bool operator==(const WallFamily&, const WallFamily&) = default;
};

/// Row view of a family: one entry per (c, d, e) with its rank range.
struct FamilyRow {
  Rat c;
  Rat d;
  Rat e;
  RankRange ranks;
  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

/// A candidate with ch1 = 0 of shape (r, 0, d, 0): its slope coincides with
/// lambda(E) everywhere, so it defines no curve in the slice.
struct DegenerateCandidate {
  ChernCharacter sub;
  std::string note{kDegenerateNote};
  friend bool operator==(const DegenerateCandidate&, const DegenerateCandidate&) = default;
};

/// Result of max_alpha0: the largest alpha_0^2 over all families and the
/// smallest n with n^2 > alpha_0^2 (so Hom(O(n), E) = 0 for n >= n_min on
/// limit-semistable E). has_walls is false when no family exists, in which
/// case alpha0_sq = 0 and n_min = 1.
struct MaxAlpha0 {
  bool has_walls;
  Rat alpha0_sq;
  Int n_min;
};

namespace detail {

/// Thread budget for the d-grid: WALLLAB_THREADS if set to a positive
/// integer, otherwise hardware_concurrency; always at least 1.
inline unsigned wall_thread_budget() {
  if (const char* env = std::getenv("WALLLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Validates the (R, D) input shared by the enumeration entry points.
inline void validate_rd(long R, const Rat& D) {
  if (R < 0) throw std::invalid_argument("rank parameter R must be >= 0");
  if (D <= 0) throw std::invalid_argument("degree parameter D must be > 0");
  if (!is_integer(2 * D)) {
    throw std::invalid_argument("degree parameter D must be a half-integer (2D in Z)");
  }
}

/// Enumerates all candidates for one value of 2d = k; pure function used by
/// the worker threads. v = (-R, 0, D, 0), twoD = 2D.
inline void enumerate_for_2d(long R, const Rat& D, const Int& twoD, const Int& k,
                             std::vector<WallCandidate>& out) {
  const Rat d(k, 2);
  const Rat cap = std::min(Rat(4 * d * d), Rat(4 * (D - d) * (D - d)));  // bound (b)
  const ChernCharacter v{Rat(-R), Rat(0), D, Rat(0)};

  for (Int c = 1; Rat(c * c) <= cap; ++c) {
    // (c): c2-integrality d - c^2/2 in Z is r- and e-free.
    if (!is_integer(d - Rat(c * c, 2))) continue;

    // e ranges over the (1/6)Z grid; write m = 6e. The chi-integrality
    // condition e - c/6 in Z forces m = c (mod 6), and (g) gives m >= c,
    // so the admissible m are c, c+6, c+12, ... up to (b)'s cap.
    for (Int m = c; Rat(c * m) <= cap; m += 6) {
      const Rat e(m, 6);
      const ChernCharacter row_shape{Rat(0), Rat(c), d, e};
      if (!integrality_beta0(row_shape)) continue;  // (c) in full

      const Rat w(m, 6 * c);        // e/c
      const Rat alpha0_sq(m, c);    // 6e/c

      // (d): the closed rank interval.
      const Rat lo_bound = -Rat(c * (twoD - k), m) - R;
      const Rat hi_bound = Rat(c * k, m);
      const Int r_lo = rat_ceil(lo_bound);
      const Int r_hi = rat_floor(hi_bound);
      if (r_lo > r_hi) continue;

      // Endpoint Q-filter pieces that do not depend on r.
      const Rat q_sub_at0 = 4 * d * d - 6 * Rat(c) * e;
      const Rat q_quot_at0 = 4 * (D - d) * (D - d) - 6 * Rat(c) * e;

      std::vector<Int> passing;
      for (Int r = r_lo; r <= r_hi; ++r) {
        const ChernCharacter sub{Rat(r), Rat(c), d, e};
        const ChernCharacter quot = v - sub;

        // (e): Q >= 0 with K = 1 at alpha^2 in {0, 6e/c} for sub and quot.
        const Rat q_sub_at_wall =
            alpha0_sq * (Rat(c * c) - 2 * sub.ch0 * d) + q_sub_at0;
        const Rat q_quot_at_wall =
            alpha0_sq * (quot.ch1 * quot.ch1 - 2 * quot.ch0 * quot.ch2) + q_quot_at0;
        if (q_sub_at0 < 0 || q_quot_at0 < 0 || q_sub_at_wall < 0 || q_quot_at_wall < 0) {
          continue;
        }

        // (f): category condition at both endpoints, non-strict.
        const Rat mid0 = d;  // alpha^2 = 0
        const Rat mid_wall = d - alpha0_sq / 2 * sub.ch0;
        const Rat upper_wall = D + alpha0_sq / 2 * Rat(R);
        const bool f_at0 = (0 <= mid0) && (mid0 <= D);
        const bool f_at_wall = (0 <= mid_wall) && (mid_wall <= upper_wall);
        if (!f_at0) {
          throw std::logic_error("wall enumeration invariant violated: 0 <= d <= D");
        }
        // (d) <=> (f) at the wall endpoint: r <= c(2d)/(6e) is exactly
        // d - (alpha0^2/2) r >= 0 and the lower rank bound is exactly the
        // upper category bound. A mismatch means internal inconsistency.
        if (!f_at_wall) {
          throw std::logic_error(
              "wall enumeration invariant violated: rank interval (d) disagrees "
              "with endpoint category condition (f)");
        }

        passing.push_back(r);
      }
      if (passing.empty()) continue;

      const RankRange range{passing.front(), passing.back()};
      for (const Int& r : passing) {
        const ChernCharacter sub{Rat(r), Rat(c), d, e};
        out.push_back(WallCandidate{sub, v - sub, w, alpha0_sq, range, std::string{}});
      }
    }
  }
}

/// Canonical member order: lexicographic by (c, d, e, r).
inline bool member_less(const WallCandidate& x, const WallCandidate& y) {
  if (x.sub.ch1 != y.sub.ch1) return x.sub.ch1 < y.sub.ch1;
  if (x.sub.ch2 != y.sub.ch2) return x.sub.ch2 < y.sub.ch2;
  if (x.sub.ch3 != y.sub.ch3) return x.sub.ch3 < y.sub.ch3;
  return x.sub.ch0 < y.sub.ch0;
}

}  // namespace detail

/**
 * Enumerates all numerical candidate walls for v = (-R, 0, D, 0) at beta = 0.
 *
 * The search may run in parallel over the d-grid (bounded by the
 * WALLLAB_THREADS environment variable); results are merged and canonically
 * sorted, so the output is identical for every thread count.
 *
 * @returns families sorted by descending wall constant (outermost chamber
 *          first); members within a family sorted by (c, d, e, r). Wall
 *          constants are distinct across families by construction.
 * @throws std::invalid_argument for R < 0, D <= 0, or 2D not an integer.
 */
inline std::vector<WallFamily> enumerate(long R, const Rat& D) {
  detail::validate_rd(R, D);
  const Int twoD = rat_floor(2 * D);

  // Collect the d-grid: 0 < 2d < 2D.
  std::vector<Int> grid;
  for (Int k = 1; k < twoD; ++k) grid.push_back(k);

  std::vector<WallCandidate> all;
  const unsigned budget = detail::wall_thread_budget();
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(budget, grid.size() ? grid.size() : 1));

  if (threads <= 1 || grid.size() <= 1) {
    for (const Int& k : grid) detail::enumerate_for_2d(R, D, twoD, k, all);
  } else {
    std::vector<std::vector<WallCandidate>> buckets(threads);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < grid.size(); i += threads) {
            detail::enumerate_for_2d(R, D, twoD, grid[i], buckets[t]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    for (auto& bucket : buckets) {
      all.insert(all.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
    }
  }

  // Group by wall constant, descending; sort members canonically.
  std::map<Rat, std::vector<WallCandidate>, std::greater<Rat>> grouped;
  for (auto& cand : all) grouped[cand.wall_constant].push_back(std::move(cand));

  std::vector<WallFamily> families;
  families.reserve(grouped.size());
  for (auto& [w, members] : grouped) {
    std::sort(members.begin(), members.end(), detail::member_less);
    families.push_back(WallFamily{w, 6 * w, std::move(members)});
  }
  return families;
}

/**
 * Degenerate candidates with ch1 = 0: all (r, 0, d, 0) with r, d integers
 * (c = 0 forces d integral by the c2 condition), 0 <= d <= D and
 * 0 <= -r <= R, excluding 0 and v itself. These have the same slope as E at
 * every slice point, hence define no curve.
 */
inline std::vector<DegenerateCandidate> degenerate_c0(long R, const Rat& D) {
  detail::validate_rd(R, D);
  const ChernCharacter v{Rat(-R), Rat(0), D, Rat(0)};
  const Int d_max = rat_floor(D);

  std::vector<DegenerateCandidate> out;
  for (long r = -R; r <= 0; ++r) {
    for (Int dd = 0; dd <= d_max; ++dd) {
      const ChernCharacter sub{Rat(r), Rat(0), Rat(dd), Rat(0)};
      const ChernCharacter zero{Rat(0), Rat(0), Rat(0), Rat(0)};
      if (sub == zero || sub == v) continue;
      out.push_back(DegenerateCandidate{sub});
    }
  }
  std::sort(out.begin(), out.end(), [](const DegenerateCandidate& a, const DegenerateCandidate& b) {
    return lex_less(a.sub, b.sub);
  });
  return out;
}

/**
 * Exact points of the wall curve (s + 1/6) alpha^2 = w at the given alpha^2
 * grid values: s = w/alpha^2 - 1/6, each exactly rational.
 *
 * @throws std::domain_error if a grid value lies outside (0, 6w), where the
 *         curve would leave s > 0.
 */
inline std::vector<SlicePoint> wall_curve_samples(const Rat& w, const std::vector<Rat>& alpha_sq_grid) {
  if (w <= 0) throw std::domain_error("wall constant must be positive");
  std::vector<SlicePoint> points;
  points.reserve(alpha_sq_grid.size());
  for (const Rat& a : alpha_sq_grid) {
    if (a <= 0 || a >= 6 * w) {
      throw std::domain_error("alpha^2 grid value " + format_rat(a) +
                              " outside (0, 6w) = (0, " + format_rat(6 * w) + "): s would be <= 0");
    }
    points.emplace_back(a, w / a - Rat(1, 6));
  }
  return points;
}

/**
 * The dual family: maps each candidate (A, B) to (dual_shift2(B),
 * dual_shift2(A)). The image has the same wall constant and applying the map
 * twice is the identity. For integer D the image is again contained in
 * enumerate(R, D)'s output; for half-integer D it is not, because the
 * reflection d -> D - d moves d to the opposite d - c^2/2 integrality class.
 *
 * @throws std::logic_error if a member's sub + quot != (-R, 0, D, 0).
 */
inline WallFamily dual_family(const WallFamily& f, long R, const Rat& D) {
  const ChernCharacter v{Rat(-R), Rat(0), D, Rat(0)};
  WallFamily out{f.wall_constant, f.alpha0_sq, {}};
  out.members.reserve(f.members.size());
  for (const WallCandidate& m : f.members) {
    if (m.sub + m.quot != v) {
      throw std::logic_error("dual_family: candidate does not split the input character");
    }
    WallCandidate dual;
    dual.sub = dual_shift2(m.quot);
    dual.quot = dual_shift2(m.sub);
    dual.wall_constant = dual.sub.ch3 / dual.sub.ch1;
    dual.alpha0_sq = 6 * dual.wall_constant;
    // Ranks map by r' = -R - r, reversing the interval.
    dual.rank_range = RankRange{-Int(R) - m.rank_range.hi, -Int(R) - m.rank_range.lo};
    dual.annotation = m.annotation;
    out.members.push_back(std::move(dual));
  }
  std::sort(out.members.begin(), out.members.end(), detail::member_less);
  return out;
}

/// Row view: one entry per (c, d, e) of the family, in member order.
/// @throws std::logic_error if members of one row disagree on the rank range.
inline std::vector<FamilyRow> family_rows(const WallFamily& f) {
  std::vector<FamilyRow> rows;
  for (const WallCandidate& m : f.members) {
    if (!rows.empty() && rows.back().c == m.sub.ch1 && rows.back().d == m.sub.ch2 &&
        rows.back().e == m.sub.ch3) {
      if (!(rows.back().ranks == m.rank_range)) {
        throw std::logic_error("family_rows: inconsistent rank range within a row");
      }
      continue;
    }
    rows.push_back(FamilyRow{m.sub.ch1, m.sub.ch2, m.sub.ch3, m.rank_range});
  }
  return rows;
}

/**
 * Largest alpha_0^2 = 6e/c over all families of enumerate(R, D) and the
 * smallest integer n with n^2 > alpha_0^2; Hom(O(n), E) = 0 for all
 * n >= n_min when E is limit-semistable. With no families at all the result
 * is (has_walls = false, 0, 1).
 */
inline MaxAlpha0 max_alpha0_of(const std::vector<WallFamily>& fams) {
  if (fams.empty()) return MaxAlpha0{false, Rat(0), Int(1)};
  const Rat& max_sq = fams.front().alpha0_sq;  // families sorted by descending w
  Int n = 1;
  while (Rat(n * n) <= max_sq) ++n;
  return MaxAlpha0{true, max_sq, n};
}

inline MaxAlpha0 max_alpha0(long R, const Rat& D) { return max_alpha0_of(enumerate(R, D)); }

}  // namespace walllab
