// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file asymptotics.hpp
 * @brief Asymptotic stability along vertical lines beta = betaBar:
 *        the alpha -> infinity expansion of lambda(F) - lambda(A) and the
 *        per-condition predicate reports for the vertical-line theorems.
 *
 * Writing a = alpha^2, both the numerator N(a) = ch3^b - (s + 1/6) a ch1^b
 * and the denominator rho(a) = ch2^b - (a/2) ch0 of lambda are linear in a,
 * so lambda(F) - lambda(A) = P(a) / Q(a) with P = N_F rho_A - N_A rho_F of
 * degree <= 2 and Q = rho_F rho_A of degree <= 2. The expansion engine
 * returns the first nonvanishing order (as a power of alpha = a^(1/2)) and
 * its exact rational coefficient.
 *
 * The predicate layer evaluates the numeric conditions of the vertical-line
 * stability criteria. Two of the five conditions (cohomology vanishing and
 * mu-(semi)stability of H^{-1}) are sheaf-theoretic facts that cannot be
 * decided from Chern characters alone: the report takes them as caller
 * attestations and labels them as such in output.
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/stability.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace walllab {

/**
 * Sign and leading term of lambda(F) - lambda(A) as alpha -> infinity.
 * When the difference vanishes identically, identically_zero is set, the
 * exponent prints as the sentinel "all", and sign = 0. Otherwise the
 * difference behaves as leading_coeff * alpha^leading_exponent with
 * leading_exponent in {2, 0, -2, -4}.
 */
struct AsymptoticSign {
  bool identically_zero = false;
  int leading_exponent = 0;
  Rat leading_coeff = Rat(0);
  int sign = 0;  ///< -1, 0, +1; sign of the first nonvanishing order
  std::string note;

  std::string exponent_str() const {
    return identically_zero ? "all" : std::to_string(leading_exponent);
  }
};

namespace detail {

/// Linear polynomial c0 + c1 * a.
struct LinPoly {
  Rat c0;
  Rat c1;
};

/// Product of two linear polynomials: quadratic [c0, c1, c2].
inline std::array<Rat, 3> lin_product(const LinPoly& x, const LinPoly& y) {
  return {x.c0 * y.c0, x.c0 * y.c1 + x.c1 * y.c0, x.c1 * y.c1};
}

}  // namespace detail

/**
 * Expands lambda(F) - lambda(A) at alpha -> infinity; exact rational
 * leading coefficient at the first nonvanishing order.
 *
 * @throws std::domain_error "slope undefined at infinity" if rho of F or A
 *         vanishes identically as a polynomial in alpha^2 (ch0 = ch2^b = 0).
 */
inline AsymptoticSign lambda_diff_expansion(const ChernCharacter& F, const ChernCharacter& A,
                                            const Rat& beta, const Rat& s) {
  const ChernCharacter tF = twist(F, beta);
  const ChernCharacter tA = twist(A, beta);
  if (tF.ch0 == 0 && tF.ch2 == 0) {
    throw std::domain_error("slope undefined at infinity: rho of " + to_string(F) +
                            " vanishes identically");
  }
  if (tA.ch0 == 0 && tA.ch2 == 0) {
    throw std::domain_error("slope undefined at infinity: rho of " + to_string(A) +
                            " vanishes identically");
  }

  const Rat sfac = s + Rat(1, 6);
  const detail::LinPoly nF{tF.ch3, -sfac * tF.ch1};
  const detail::LinPoly nA{tA.ch3, -sfac * tA.ch1};
  const detail::LinPoly rF{tF.ch2, -tF.ch0 / 2};
  const detail::LinPoly rA{tA.ch2, -tA.ch0 / 2};

  const std::array<Rat, 3> fa = detail::lin_product(nF, rA);
  const std::array<Rat, 3> af = detail::lin_product(nA, rF);
  const std::array<Rat, 3> P = {fa[0] - af[0], fa[1] - af[1], fa[2] - af[2]};
  const std::array<Rat, 3> Q = detail::lin_product(rF, rA);

  AsymptoticSign out;
  int deg_p = -1;
  for (int i = 2; i >= 0; --i) {
    if (P[i] != 0) {
      deg_p = i;
      break;
    }
  }
  if (deg_p < 0) {
    out.identically_zero = true;
    out.note = "lambda(F) - lambda(A) vanishes identically in alpha";
    return out;
  }
  int deg_q = -1;
  for (int i = 2; i >= 0; --i) {
    if (Q[i] != 0) {
      deg_q = i;
      break;
    }
  }
  // Q is a product of two nonzero linear polynomials, hence nonzero.

  out.leading_exponent = 2 * (deg_p - deg_q);
  out.leading_coeff = P[deg_p] / Q[deg_q];
  out.sign = sign_of(out.leading_coeff);
  if (deg_p < 2) {
    out.note = "higher-order numerator coefficients vanish; reporting the first "
               "nonvanishing order";
  }
  return out;
}

/// The vertical-line threshold (6s+1)/3 (mu(A) - betaBar) + betaBar.
inline Rat threshold(const Rat& mu_A, const Rat& beta_bar, const Rat& s) {
  return (6 * s + 1) / 3 * (mu_A - beta_bar) + beta_bar;
}

/**
 * Quotient condition: every quotient sheaf P of H^0(A) must satisfy
 * ch3(P)/ch2(P) > threshold (strict) or >= (non-strict) whenever
 * ch2(P) != 0; vacuously true when ch2(P) = 0.
 */
inline bool check_quotient(const ChernCharacter& P, const Rat& mu_A, const Rat& beta_bar,
                           const Rat& s, bool strict) {
  if (P.ch2 == 0) return true;
  const Rat ratio = P.ch3 / P.ch2;
  const Rat thr = threshold(mu_A, beta_bar, s);
  return strict ? (ratio > thr) : (ratio >= thr);
}

/**
 * Equal-slope subobject condition (semistable criterion, condition (3)):
 *
 *   (s + 1/6)(mu(A) - betaBar) delta20^b(F, A) - 1/2 delta30^b(F, A) <= 0,
 *
 * with the twisted deltas at b = betaBar.
 *
 * @throws std::invalid_argument unless mu(F) = mu(A) with both ranks nonzero.
 */
inline bool check_sub_equal_slope(const ChernCharacter& F, const ChernCharacter& A,
                                  const Rat& beta_bar, const Rat& s) {
  if (F.ch0 == 0 || A.ch0 == 0) {
    throw std::invalid_argument("check_sub_equal_slope: both ranks must be nonzero");
  }
  if (F.ch1 * A.ch0 != A.ch1 * F.ch0) {
    throw std::invalid_argument("check_sub_equal_slope: mu(F) = mu(A) required");
  }
  const Rat mu_A = A.ch1 / A.ch0;
  const Rat lhs = (s + Rat(1, 6)) * (mu_A - beta_bar) * delta(2, 0, F, A, beta_bar) -
                  Rat(1, 2) * delta(3, 0, F, A, beta_bar);
  return lhs <= 0;
}

/**
 * Subsheaf condition on R inside the double-dual quotient:
 * ch3(R)/ch2(R) < threshold (strict) or <= (non-strict).
 *
 * @throws std::invalid_argument unless ch2(R) > 0 (pure 1-dimensional).
 */
inline bool check_subsheaf_Qe(const ChernCharacter& Rch, const Rat& mu_A, const Rat& beta_bar,
                              const Rat& s, bool strict) {
  if (Rch.ch2 <= 0) {
    throw std::invalid_argument("check_subsheaf_Qe: ch2 > 0 required (pure 1-dimensional)");
  }
  const Rat ratio = Rch.ch3 / Rch.ch2;
  const Rat thr = threshold(mu_A, beta_bar, s);
  return strict ? (ratio < thr) : (ratio <= thr);
}

/**
 * Lifting condition on a sheaf U of dimension <= 1 whose morphism to H^0(A)
 * lifts: ch3(U)/ch2(U) < threshold (strict) or <= (non-strict); vacuously
 * true when ch2(U) = 0 (0-dimensional U).
 */
inline bool check_lifting(const ChernCharacter& U, const Rat& mu_A, const Rat& beta_bar,
                          const Rat& s, bool strict) {
  if (U.ch2 == 0) return true;
  const Rat ratio = U.ch3 / U.ch2;
  const Rat thr = threshold(mu_A, beta_bar, s);
  return strict ? (ratio < thr) : (ratio <= thr);
}

/// Which vertical-line criterion the report evaluates.
///  - strict_stable: the sufficient criterion (strict inequalities);
///  - semistable:    the necessary criterion (non-strict inequalities);
///  - small_s:       the s < 1/3 specialization for v0 < 0, v1 = 0, v2 > 0,
///                   where thresholds reduce to sign conditions on ch3;
///  - large_s:       the s > 1/3 specialization of the same shape.
enum class TheoremMode { strict_stable, semistable, small_s, large_s };

inline std::string mode_name(TheoremMode m) {
  switch (m) {
    case TheoremMode::strict_stable: return "strict";
    case TheoremMode::semistable: return "semistable";
    case TheoremMode::small_s: return "s<1/3";
    case TheoremMode::large_s: return "s>1/3";
  }
  throw std::logic_error("mode_name: unknown mode");
}

inline TheoremMode parse_mode(const std::string& name) {
  if (name == "strict") return TheoremMode::strict_stable;
  if (name == "semistable") return TheoremMode::semistable;
  if (name == "s<1/3") return TheoremMode::small_s;
  if (name == "s>1/3") return TheoremMode::large_s;
  throw std::invalid_argument("unknown theorem mode \"" + name +
                              "\" (expected strict, semistable, s<1/3, or s>1/3)");
}

/// Status of one of the five conditions.
enum class ConditionStatus { pass, fail, attested, indeterminate };

inline std::string condition_status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::pass: return "pass";
    case ConditionStatus::fail: return "fail";
    case ConditionStatus::attested: return "attested";
    case ConditionStatus::indeterminate: return "indeterminate";
  }
  throw std::logic_error("condition_status_name: unknown status");
}

/**
 * Caller-supplied data for a vertical-line report. Conditions (1) and (3)
 * rest on sheaf-level facts supplied through `attested` (keys 1 and 3); a
 * missing key makes that condition indeterminate. The character lists are
 * taken as complete enumerations of the relevant quotients/subsheaves/
 * liftings; empty lists make the numeric checks vacuous passes.
 */
struct TheoremInput {
  ChernCharacter A;
  Rat beta_bar;
  Rat s;
  TheoremMode mode = TheoremMode::strict_stable;
  std::map<int, bool> attested;                  ///< keys 1, 3
  std::vector<ChernCharacter> quotients;         ///< P: quotients of H^0(A)
  std::vector<ChernCharacter> equal_slope_subs;  ///< F: subobjects with mu(F) = mu(A)
  std::vector<ChernCharacter> subsheaves;        ///< R: subsheaves of the double-dual quotient
  std::vector<ChernCharacter> liftings;          ///< U: lifting sources of dimension <= 1
};

/// Outcome for one condition, with a human-readable witness.
struct ConditionReport {
  int condition = 0;  ///< 1..5
  ConditionStatus status = ConditionStatus::indeterminate;
  std::string witness;
};

/// Aggregated per-condition report.
struct TheoremReport {
  TheoremMode mode = TheoremMode::strict_stable;
  ChernCharacter A;
  Rat beta_bar;
  Rat s;
  Rat mu_A;                            ///< finite by the mode preconditions
  bool uses_threshold = false;         ///< strict/semistable modes
  Rat threshold_value;                 ///< when uses_threshold
  bool has_validity_interval = false;  ///< small_s / large_s modes
  Rat validity_lower;                  ///< -3/(|2-6s| ch2(A)); interval (validity_lower, 0)
  std::array<ConditionReport, 5> conditions;
  ConditionStatus overall = ConditionStatus::indeterminate;

  bool any_fail() const {
    for (const ConditionReport& c : conditions) {
      if (c.status == ConditionStatus::fail) return true;
    }
    return false;
  }
};

namespace detail {

inline std::string attestation_witness(const std::map<int, bool>& attested, int key,
                                       const std::string& fact, ConditionStatus& status) {
  const auto it = attested.find(key);
  if (it == attested.end()) {
    status = ConditionStatus::indeterminate;
    return fact + ": no attestation provided";
  }
  if (!it->second) {
    status = ConditionStatus::fail;
    return fact + ": caller attests the condition is violated";
  }
  status = ConditionStatus::attested;
  return fact + ": attested by caller";
}

/// fail > indeterminate > attested > pass when merging sub-results.
inline ConditionStatus merge_status(ConditionStatus a, ConditionStatus b) {
  const auto rank = [](ConditionStatus s) {
    switch (s) {
      case ConditionStatus::fail: return 3;
      case ConditionStatus::indeterminate: return 2;
      case ConditionStatus::attested: return 1;
      case ConditionStatus::pass: return 0;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace detail

/**
 * Evaluates the five conditions of the selected vertical-line criterion on
 * the caller-supplied data.
 *
 * Preconditions by mode:
 *  - strict_stable / semistable: ch0(A) != 0 (mu(A) must be finite);
 *  - small_s: ch0(A) < 0, ch1(A) = 0, ch2(A) > 0, and s < 1/3;
 *  - large_s: same character shape and s > 1/3.
 * Violations throw std::invalid_argument. The small_s/large_s reports also
 * surface the validity interval -3/(|2-6s| ch2(A)) < betaBar < 0 for which
 * the sign-condition reduction is exact.
 */
inline TheoremReport vert_theorem_report(const TheoremInput& in) {
  TheoremReport rep;
  rep.mode = in.mode;
  rep.A = in.A;
  rep.beta_bar = in.beta_bar;
  rep.s = in.s;

  const bool regime = (in.mode == TheoremMode::small_s || in.mode == TheoremMode::large_s);
  const bool strict = (in.mode == TheoremMode::strict_stable);

  if (!regime) {
    if (in.A.ch0 == 0) {
      throw std::invalid_argument("vert_theorem_report: ch0(A) != 0 required for the " +
                                  mode_name(in.mode) + " mode");
    }
  } else {
    if (!(in.A.ch0 < 0 && in.A.ch1 == 0 && in.A.ch2 > 0)) {
      throw std::invalid_argument(
          "vert_theorem_report: the " + mode_name(in.mode) +
          " mode requires ch0(A) < 0, ch1(A) = 0, ch2(A) > 0; got " + to_string(in.A));
    }
    if (in.mode == TheoremMode::small_s && !(in.s < Rat(1, 3))) {
      throw std::invalid_argument("vert_theorem_report: mode s<1/3 requires s < 1/3");
    }
    if (in.mode == TheoremMode::large_s && !(in.s > Rat(1, 3))) {
      throw std::invalid_argument("vert_theorem_report: mode s>1/3 requires s > 1/3");
    }
  }
  rep.mu_A = in.A.ch1 / in.A.ch0;

  if (!regime) {
    rep.uses_threshold = true;
    rep.threshold_value = threshold(rep.mu_A, in.beta_bar, in.s);
  } else {
    rep.has_validity_interval = true;
    const Rat gap = 2 - 6 * in.s;
    rep.validity_lower = Rat(-3) / ((gap < 0 ? -gap : gap) * in.A.ch2);
  }

  // Condition (1): cohomology vanishing — attested.
  {
    ConditionReport& c = rep.conditions[0];
    c.condition = 1;
    std::string fact;
    switch (in.mode) {
      case TheoremMode::strict_stable:
      case TheoremMode::small_s:
        fact = "H^p(A) = 0 for p != -1, 0";
        break;
      case TheoremMode::semistable:
        fact = "H^{-2}(A) = 0";
        break;
      case TheoremMode::large_s:
        fact = "A_11 = A_01 = 0";
        break;
    }
    c.witness = detail::attestation_witness(in.attested, 1, fact, c.status);
  }

  // Condition (2): quotients of H^0(A).
  {
    ConditionReport& c = rep.conditions[1];
    c.condition = 2;
    c.status = ConditionStatus::pass;
    std::size_t checked = 0;
    for (const ChernCharacter& P : in.quotients) {
      bool ok = true;
      std::string why;
      if (!regime) {
        ok = check_quotient(P, rep.mu_A, in.beta_bar, in.s, strict);
        if (!ok) {
          why = "ch3/ch2 = " + format_rat(P.ch3 / P.ch2) + " vs threshold " +
                format_rat(rep.threshold_value);
        }
      } else {
        const bool premise = (in.mode == TheoremMode::small_s) ? (P.ch2 >= 0) : (P.ch2 > 0);
        ok = !premise || P.ch3 >= 0;
        if (!ok) why = "ch3(P) = " + format_rat(P.ch3) + " < 0";
      }
      ++checked;
      if (!ok) {
        c.status = ConditionStatus::fail;
        c.witness = "quotient " + to_string(P) + " violates the bound: " + why;
        break;
      }
    }
    if (c.status == ConditionStatus::pass) {
      c.witness = checked == 0 ? "no quotient characters supplied; vacuous"
                               : std::to_string(checked) + " quotient character(s) checked";
    }
  }

  // Condition (3): mu-(semi)stability of H^-1(A) — attested — plus the
  // numeric equal-slope subobject checks outside the strict mode.
  {
    ConditionReport& c = rep.conditions[2];
    c.condition = 3;
    const std::string fact = strict ? "H^-1(A) is mu-stable" : "H^-1(A) is mu-semistable";
    ConditionStatus attest_status;
    std::string attest_witness = detail::attestation_witness(in.attested, 3, fact, attest_status);

    ConditionStatus numeric_status = ConditionStatus::pass;
    std::string numeric_witness;
    std::size_t checked = 0;
    if (!strict) {
      for (const ChernCharacter& F : in.equal_slope_subs) {
        bool ok = true;
        std::string why;
        if (!regime) {
          ok = check_sub_equal_slope(F, in.A, in.beta_bar, in.s);
          if (!ok) why = "equal-slope inequality violated";
        } else {
          if (F.ch0 == 0 || F.ch1 != 0) {
            throw std::invalid_argument(
                "vert_theorem_report: equal-slope subobject must have mu(F) = 0, got " +
                to_string(F));
          }
          if (!(in.A.ch0 < F.ch0 && F.ch0 < 0)) {
            throw std::invalid_argument(
                "vert_theorem_report: equal-slope subobject rank must satisfy "
                "ch0(A) < ch0(F) < 0, got " + to_string(F));
          }
          const Rat d30 = delta(3, 0, F, in.A, Rat(0));
          const Rat d20 = delta(2, 0, F, in.A, Rat(0));
          if (d30 < 0) {
            ok = false;
            why = "delta30 = " + format_rat(d30) + " < 0";
          } else if (d30 == 0) {
            if (in.mode == TheoremMode::small_s ? d20 < 0 : d20 > 0) {
              ok = false;
              why = "delta30 = 0 but delta20 = " + format_rat(d20) +
                    (in.mode == TheoremMode::small_s ? " < 0" : " > 0");
            }
          }
        }
        ++checked;
        if (!ok) {
          numeric_status = ConditionStatus::fail;
          numeric_witness = "; subobject " + to_string(F) + " fails: " + why;
          break;
        }
      }
      if (numeric_status == ConditionStatus::pass && checked > 0) {
        numeric_witness = "; " + std::to_string(checked) + " equal-slope subobject(s) checked";
      }
    }
    c.status = detail::merge_status(attest_status, numeric_status == ConditionStatus::pass
                                                       ? attest_status
                                                       : numeric_status);
    c.witness = attest_witness + numeric_witness;
  }

  // Condition (4): subsheaves of the double-dual quotient.
  {
    ConditionReport& c = rep.conditions[3];
    c.condition = 4;
    c.status = ConditionStatus::pass;
    std::size_t checked = 0;
    for (const ChernCharacter& Rch : in.subsheaves) {
      bool ok = true;
      std::string why;
      if (!regime) {
        ok = check_subsheaf_Qe(Rch, rep.mu_A, in.beta_bar, in.s, strict);
        if (!ok) {
          why = "ch3/ch2 = " + format_rat(Rch.ch3 / Rch.ch2) + " vs threshold " +
                format_rat(rep.threshold_value);
        }
      } else {
        ok = (in.mode == TheoremMode::small_s) ? (Rch.ch3 < 0) : (Rch.ch3 <= 0);
        if (!ok) {
          why = "ch3(R) = " + format_rat(Rch.ch3) +
                (in.mode == TheoremMode::small_s ? " (need < 0)" : " (need <= 0)");
        }
      }
      ++checked;
      if (!ok) {
        c.status = ConditionStatus::fail;
        c.witness = "subsheaf " + to_string(Rch) + " violates the bound: " + why;
        break;
      }
    }
    if (c.status == ConditionStatus::pass) {
      c.witness = checked == 0 ? "no subsheaf characters supplied; vacuous"
                               : std::to_string(checked) + " subsheaf character(s) checked";
    }
  }

  // Condition (5): liftings of dimension <= 1.
  {
    ConditionReport& c = rep.conditions[4];
    c.condition = 5;
    c.status = ConditionStatus::pass;
    std::size_t checked = 0;
    for (const ChernCharacter& U : in.liftings) {
      bool ok = true;
      std::string why;
      if (!regime) {
        ok = check_lifting(U, rep.mu_A, in.beta_bar, in.s, strict);
        if (!ok) {
          why = "ch3/ch2 = " + format_rat(U.ch3 / U.ch2) + " vs threshold " +
                format_rat(rep.threshold_value);
        }
      } else {
        const bool u3_ok = (in.mode == TheoremMode::small_s) ? (U.ch3 < 0) : (U.ch3 <= 0);
        ok = U.ch2 > 0 && u3_ok;
        if (!ok) {
          why = "need ch2(U) > 0 and ch3(U) " +
                std::string(in.mode == TheoremMode::small_s ? "< 0" : "<= 0") + "; got ch2 = " +
                format_rat(U.ch2) + ", ch3 = " + format_rat(U.ch3);
        }
      }
      ++checked;
      if (!ok) {
        c.status = ConditionStatus::fail;
        c.witness = "lifting " + to_string(U) + " violates the bound: " + why;
        break;
      }
    }
    if (c.status == ConditionStatus::pass) {
      c.witness = checked == 0 ? "no lifting characters supplied; vacuous"
                               : std::to_string(checked) + " lifting character(s) checked";
    }
  }

  rep.overall = ConditionStatus::pass;
  for (const ConditionReport& c : rep.conditions) {
    rep.overall = detail::merge_status(rep.overall, c.status);
  }
  return rep;
}

}  // namespace walllab
