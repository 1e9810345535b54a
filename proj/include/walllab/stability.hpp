// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file stability.hpp
 * @brief Slope functions (Mumford slope, tilt, central-charge slope), the
 *        antisymmetric pairing delta, the discriminant-like rho, and the
 *        support-property quadratic form.
 *
 * All functions are pure and exact. The central charge at the slice point
 * (alpha^2, s) with twist parameter beta is
 *
 *   Z(E) = -(ch3^b - (s + 1/6) a ch1^b) + i (ch2^b - a/2 ch0),   a := alpha^2,
 *
 * and the associated slope is the ratio lambda = Re'/Im with the sign
 * convention below. When a defining denominator vanishes, the slope is the
 * documented +infinity sentinel, never an undefined value.
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/rational.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace walllab {

/**
 * A point (alpha^2, s) of the vertical slice. Both coordinates are exact
 * positive rationals; alpha itself may be irrational, so the tool always
 * works with alpha^2 and takes square roots only for display.
 */
class SlicePoint {
 public:
  SlicePoint(Rat alpha_sq, Rat s) : alpha_sq_(std::move(alpha_sq)), s_(std::move(s)) {
    if (alpha_sq_ <= 0 || s_ <= 0) {
      throw std::invalid_argument("SlicePoint requires alpha^2 > 0 and s > 0");
    }
  }
  const Rat& alpha_sq() const { return alpha_sq_; }
  const Rat& s() const { return s_; }

  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;

 private:
  Rat alpha_sq_;
  Rat s_;
};

/**
 * A slope: either a finite exact rational or the +infinity sentinel, which
 * arises exactly when the defining denominator is zero. +infinity compares
 * greater than every finite value and equal to itself.
 */
class SlopeValue {
 public:
  static SlopeValue infinity() { return SlopeValue(true, Rat(0)); }
  SlopeValue(Rat v) : infinite_(false), value_(std::move(v)) {}  // NOLINT: implicit by design

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws if the slope is the +infinity sentinel.
  const Rat& value() const {
    if (infinite_) throw std::logic_error("SlopeValue: +infinity has no finite value");
    return value_;
  }

  friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
    if (a.infinite_) return false;           // +inf is maximal
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  std::string str() const { return infinite_ ? "+inf" : format_rat(value_); }

 private:
  SlopeValue(bool inf, Rat v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rat value_;
};

/// Twisted Mumford slope mu_beta = ch1^b / ch0, or +infinity when ch0 = 0.
inline SlopeValue mu(const ChernCharacter& v, const Rat& beta) {
  if (v.ch0 == 0) return SlopeValue::infinity();
  const ChernCharacter t = twist(v, beta);
  return SlopeValue(t.ch1 / t.ch0);
}

/// rho = ch2^b - alpha^2/2 ch0, the imaginary part of the central charge.
inline Rat rho(const ChernCharacter& v, const Rat& alpha_sq, const Rat& beta) {
  const ChernCharacter t = twist(v, beta);
  return t.ch2 - alpha_sq / 2 * t.ch0;
}
inline Rat rho(const ChernCharacter& v, const SlicePoint& p, const Rat& beta) {
  return rho(v, p.alpha_sq(), beta);
}

/**
 * The tilt slope nu = (ch2^b - alpha^2/2 ch0) / (alpha ch1^b), reported as
 * the exact rational alpha * nu (the numerator over ch1^b): alpha is
 * irrational in general, so nu itself is not rational, but alpha * nu is,
 * and nu's sign and vanishing coincide with those of alpha * nu.
 * +infinity when ch1^b = 0.
 */
inline SlopeValue nu_times_alpha(const ChernCharacter& v, const Rat& alpha_sq, const Rat& beta) {
  const ChernCharacter t = twist(v, beta);
  if (t.ch1 == 0) return SlopeValue::infinity();
  return SlopeValue((t.ch2 - alpha_sq / 2 * t.ch0) / t.ch1);
}
inline SlopeValue nu_times_alpha(const ChernCharacter& v, const SlicePoint& p, const Rat& beta) {
  return nu_times_alpha(v, p.alpha_sq(), beta);
}

/// Exact sign of nu: -1, 0, +1, with the +infinity sentinel counted as +1.
inline int nu_sign(const ChernCharacter& v, const Rat& alpha_sq, const Rat& beta) {
  const SlopeValue na = nu_times_alpha(v, alpha_sq, beta);
  return na.is_infinite() ? +1 : sign_of(na.value());
}

/**
 * The central-charge slope
 *
 *   lambda = (ch3^b - (s + 1/6) alpha^2 ch1^b) / (ch2^b - alpha^2/2 ch0),
 *
 * exactly rational at rational (alpha^2, s, beta); the +infinity sentinel
 * when the denominator rho vanishes (our convention, flagged in output).
 */
inline SlopeValue lambda(const ChernCharacter& v, const SlicePoint& p, const Rat& beta) {
  const ChernCharacter t = twist(v, beta);
  const Rat den = t.ch2 - p.alpha_sq() / 2 * t.ch0;
  if (den == 0) return SlopeValue::infinity();
  const Rat num = t.ch3 - (p.s() + Rat(1, 6)) * p.alpha_sq() * t.ch1;
  return SlopeValue(num / den);
}

/**
 * Antisymmetric pairing
 *   delta_ij^b(F, A) = ch_i^b(F) ch_j^b(A) - ch_j^b(F) ch_i^b(A),
 * bilinear in (F, A), with delta_ii = 0.
 *
 * @throws std::out_of_range unless i, j are in {0,1,2,3}.
 */
inline Rat delta(int i, int j, const ChernCharacter& F, const ChernCharacter& A, const Rat& beta) {
  if (i < 0 || i > 3 || j < 0 || j > 3) {
    throw std::out_of_range("delta indices must lie in {0,1,2,3}");
  }
  const ChernCharacter f = twist(F, beta);
  const ChernCharacter a = twist(A, beta);
  return f[i] * a[j] - f[j] * a[i];
}

namespace detail {

/// The symmetric matrix B of the support-property form, as a function of
/// alpha^2 and K:
///
///   [   0      0    -K a    0 ]
///   [   0     K a     0    -3 ]
///   [ -K a     0      4     0 ]
///   [   0     -3      0     0 ]
inline std::array<std::array<Rat, 4>, 4> b_matrix(const Rat& alpha_sq, const Rat& K) {
  const Rat ka = K * alpha_sq;
  std::array<std::array<Rat, 4>, 4> B{};
  B[0][2] = -ka;
  B[1][1] = ka;
  B[1][3] = Rat(-3);
  B[2][0] = -ka;
  B[2][2] = Rat(4);
  B[3][1] = Rat(-3);
  return B;
}

}  // namespace detail

/**
 * Support-property pairing Q(F, A) = (ch^b F)^T B (ch^b A), computed through
 * the matrix. The form is symmetric in (F, A) and invariant under applying
 * dual_shift2 to both arguments.
 *
 * Precondition (documented, not enforced: the function does not receive s):
 * the support property holds for K in [1, 6s+1); all enumeration filters in
 * this library fix K = 1, valid for every s > 0.
 */
inline Rat q_form(const ChernCharacter& F, const ChernCharacter& A, const Rat& alpha_sq,
                  const Rat& K, const Rat& beta) {
  const ChernCharacter f = twist(F, beta);
  const ChernCharacter a = twist(A, beta);
  const auto B = detail::b_matrix(alpha_sq, K);
  Rat total = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (B[i][j] != 0) total += f[i] * B[i][j] * a[j];
    }
  }
  return total;
}
inline Rat q_form(const ChernCharacter& F, const ChernCharacter& A, const SlicePoint& p,
                  const Rat& K, const Rat& beta) {
  return q_form(F, A, p.alpha_sq(), K, beta);
}

/**
 * Closed form of the diagonal Q(A, A): writing the twisted character as
 * (r, c, d, e),
 *
 *   Q(A, A) = K alpha^2 (c^2 - 2 r d) + 4 d^2 - 6 c e.
 *
 * Must agree with the matrix product q_form(A, A, ...); the test suite
 * asserts the equivalence on random input (internal cross-check).
 */
inline Rat q_form_closed(const ChernCharacter& A, const Rat& alpha_sq, const Rat& K,
                         const Rat& beta) {
  const ChernCharacter t = twist(A, beta);
  const Rat& r = t.ch0;
  const Rat& c = t.ch1;
  const Rat& d = t.ch2;
  const Rat& e = t.ch3;
  return K * alpha_sq * (c * c - 2 * r * d) + 4 * d * d - 6 * c * e;
}

}  // namespace walllab
