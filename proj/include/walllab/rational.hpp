// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic: backend alias, parsing, formatting,
 *        floor/ceil, and display helpers.
 *
 * Every quantity in the core library is an exact rational; floating point
 * appears only in display and plot-sampling code. The backend is
 * boost::multiprecision::cpp_rational, which already maintains the two
 * invariants the library relies on: values are stored in lowest terms and
 * the denominator is always positive.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace walllab {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, canonical (lowest terms, denominator > 0).
using Rat = boost::multiprecision::cpp_rational;

/// True iff @p r is an integer (denominator 1 in canonical form).
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Sign of @p r as -1, 0, or +1.
inline int sign_of(const Rat& r) { return r.sign(); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int n = numerator(r);
  Int d = denominator(r);
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

/// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) {
  Int n = numerator(r);
  Int d = denominator(r);
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

/// Lowest-terms serialization: "p/q", or just "n" when the denominator is 1.
inline std::string format_rat(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

namespace detail {

/// Validates an optionally signed decimal integer literal.
inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

/// Converts a validated literal to an Int; the backend rejects '+' prefixes.
inline Int to_int(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

}  // namespace detail

/**
 * Parses the lowest-terms wire format accepted throughout the tool:
 * an integer "n" or a fraction "p/q" (q nonzero). The result is normalized
 * by the backend, so "2/4" and "-1/-2" both parse to 1/2.
 *
 * @throws std::invalid_argument on empty input, malformed digits, or a zero
 *         denominator.
 */
inline Rat parse_rat(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("malformed rational: empty string");

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_integer_literal(text)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return Rat(detail::to_int(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Int n = detail::to_int(num);
  Int d = detail::to_int(den);
  if (d == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
  if (d < 0) {  // the backend's (n, d) constructor insists on d > 0
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

/// Conversion for display and plotting only; the core never rounds.
inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Decimal display with 6 significant digits (e.g. "2.64575"), derived from
/// the exact value at print time only.
inline std::string format_decimal(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", to_double(r));
  return buf;
}

/// Same 6-significant-digit display for derived values that leave the
/// rational field (square roots for alpha0 columns).
inline std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace walllab
