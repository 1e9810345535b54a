// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file report.hpp
 * @brief Wall-report assembly and the JSON / CSV / table / SVG emitters.
 *
 * Everything except the table's timestamp footer is a pure function of the
 * input and the tool version, so JSON, CSV, and SVG output is byte-identical
 * across runs and thread counts.
 *
 * The SVG embeds the affine plot transform as data-* attributes on the root
 * element (data-x0, data-y0, data-x-scale, data-y-scale), so consumers can
 * map exact curve points to pixel coordinates and verify the rendering.
 */

#pragma once

#include <walllab/chern.hpp>
#include <walllab/quiver.hpp>
#include <walllab/version.hpp>
#include <walllab/walls.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

namespace walllab {

/// Canonical sample point for the innermost-chamber verdict: (alpha^2, s) =
/// (1/4, 1/3), where (6s+1) alpha^2 = 3/4 < 1 for every input.
inline SlicePoint innermost_sample_point() { return SlicePoint(Rat(1, 4), Rat(1, 3)); }

/// Full wall report for v = (-R, 0, D, 0): families, degenerates, the
/// innermost-chamber verdict at the canonical sample point, and the
/// hom-vanishing bound. Content is deterministic for fixed input + version.
struct WallReport {
  long R = 0;
  Rat D;
  ChernCharacter v;
  std::vector<WallFamily> families;
  std::vector<DegenerateCandidate> degenerate;
  RegionVerdict innermost;
  MaxAlpha0 max0;
  std::string tool_version{kToolVersion};
};

/// Runs the enumeration once and assembles the report.
inline WallReport build_report(long R, const Rat& D) {
  WallReport rep;
  rep.R = R;
  rep.D = D;
  rep.v = ChernCharacter{Rat(-R), Rat(0), D, Rat(0)};
  rep.families = enumerate(R, D);
  rep.degenerate = degenerate_c0(R, D);
  rep.innermost = region_verdict(R, D, innermost_sample_point());
  rep.max0 = max_alpha0_of(rep.families);
  return rep;
}

namespace detail {

inline nlohmann::ordered_json json_char(const ChernCharacter& v) {
  return nlohmann::ordered_json::array(
      {format_rat(v.ch0), format_rat(v.ch1), format_rat(v.ch2), format_rat(v.ch3)});
}

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

/// "r" with c, d, e substituted: the symbolic row form "(r, c, d, e)".
inline std::string row_char(const FamilyRow& row) {
  return "(r, " + format_rat(row.c) + ", " + format_rat(row.d) + ", " + format_rat(row.e) + ")";
}

}  // namespace detail

/// JSON report; deterministic field order, exact rationals as "p/q" strings.
inline nlohmann::ordered_json to_json(const WallReport& rep) {
  nlohmann::ordered_json j;
  j["tool_version"] = rep.tool_version;
  j["v"] = detail::json_char(rep.v);
  j["R"] = rep.R;
  j["D"] = format_rat(rep.D);

  j["families"] = nlohmann::ordered_json::array();
  for (const WallFamily& fam : rep.families) {
    nlohmann::ordered_json jf;
    jf["wall_constant"] = format_rat(fam.wall_constant);
    jf["alpha0_squared"] = format_rat(fam.alpha0_sq);
    jf["members"] = nlohmann::ordered_json::array();
    for (const WallCandidate& m : fam.members) {
      nlohmann::ordered_json jm;
      jm["sub"] = detail::json_char(m.sub);
      jm["quot"] = detail::json_char(m.quot);
      jm["rank_range"] = nlohmann::ordered_json::array(
          {detail::to_ll(m.rank_range.lo), detail::to_ll(m.rank_range.hi)});
      jm["label"] = std::string(kNumericalCandidateLabel);
      jm["annotation"] = m.annotation;
      jf["members"].push_back(std::move(jm));
    }
    j["families"].push_back(std::move(jf));
  }

  j["degenerate"] = nlohmann::ordered_json::array();
  for (const DegenerateCandidate& d : rep.degenerate) {
    nlohmann::ordered_json jd;
    jd["sub"] = detail::json_char(d.sub);
    jd["note"] = d.note;
    j["degenerate"].push_back(std::move(jd));
  }

  nlohmann::ordered_json jc;
  jc["sample_point"] = {{"alpha_sq", format_rat(innermost_sample_point().alpha_sq())},
                        {"s", format_rat(innermost_sample_point().s())}};
  jc["t"] = format_rat(rep.innermost.t);
  jc["label"] = rep.innermost.label;
  jc["message"] = rep.innermost.message;
  jc["theta_pair_O1"] = format_rat(rep.innermost.theta_pair_O1);
  if (!rep.families.empty()) {
    jc["min_wall_constant"] = format_rat(rep.families.back().wall_constant);
  } else {
    jc["min_wall_constant"] = nullptr;
  }
  j["innermost_chamber"] = std::move(jc);

  j["max_alpha0_squared"] = format_rat(rep.max0.alpha0_sq);
  j["hom_vanishing_n_min"] = detail::to_ll(rep.max0.n_min);
  return j;
}

/// CSV: header plus one row per (family, member); exact rationals.
inline std::string to_csv(const WallReport& rep) {
  std::string out = "wall_constant,alpha0_sq,r,c,d,e,quot_r,quot_c,quot_d,quot_e\n";
  for (const WallFamily& fam : rep.families) {
    for (const WallCandidate& m : fam.members) {
      out += format_rat(fam.wall_constant) + "," + format_rat(fam.alpha0_sq) + "," +
             format_rat(m.sub.ch0) + "," + format_rat(m.sub.ch1) + "," + format_rat(m.sub.ch2) +
             "," + format_rat(m.sub.ch3) + "," + format_rat(m.quot.ch0) + "," +
             format_rat(m.quot.ch1) + "," + format_rat(m.quot.ch2) + "," +
             format_rat(m.quot.ch3) + "\n";
    }
  }
  return out;
}

/**
 * Human-readable table mirroring the usual layout: one block per family,
 * one row per (c, d, e) with the symbolic rank, the rank range, alpha0 as a
 * 6-significant-digit decimal, and the exact alpha0^2 beside it. The
 * timestamp appears only in the footer (pass with_timestamp = false for
 * byte-stable output).
 */
inline std::string to_table(const WallReport& rep, bool with_timestamp = true) {
  std::string out;
  out += "wall candidates for v = " + to_string(rep.v) + "   [R = " + std::to_string(rep.R) +
         ", D = " + format_rat(rep.D) + "]\n";
  out += "walllab " + rep.tool_version + "; all candidates are numerical: membership in the "
         "lattice filter set, not actual-wall certification\n\n";

  if (rep.families.empty()) {
    out += "no wall families: every candidate is degenerate or the filter set is empty\n";
  }
  for (const WallFamily& fam : rep.families) {
    const double a0 = std::sqrt(to_double(fam.alpha0_sq));
    out += "family w = " + format_rat(fam.wall_constant) + "   curve (s + 1/6) alpha^2 = " +
           format_rat(fam.wall_constant) + "   alpha0 = " + format_decimal(a0) +
           "   alpha0^2 = " + format_rat(fam.alpha0_sq) + "\n";
    out += "  ch(A) = (r, c, d, e)      rank range        alpha0      alpha0^2   label\n";
    for (const FamilyRow& row : family_rows(fam)) {
      std::string line = "  " + detail::row_char(row);
      line.resize(std::max<std::size_t>(line.size(), 28), ' ');
      std::string ranks = row.ranks.lo.str() + " <= r <= " + row.ranks.hi.str();
      line += ranks;
      line.resize(std::max<std::size_t>(line.size(), 46), ' ');
      line += format_decimal(a0);
      line.resize(std::max<std::size_t>(line.size(), 58), ' ');
      line += format_rat(fam.alpha0_sq);
      line.resize(std::max<std::size_t>(line.size(), 69), ' ');
      line += std::string(kNumericalCandidateLabel);
      out += line + "\n";
    }
    out += "\n";
  }

  if (!rep.degenerate.empty()) {
    out += "degenerate candidates (ch1 = 0, no curve):\n";
    for (const DegenerateCandidate& d : rep.degenerate) {
      out += "  " + to_string(d.sub) + "   " + d.note + "\n";
    }
    out += "\n";
  }

  out += "innermost chamber at (alpha^2, s) = (" +
         format_rat(innermost_sample_point().alpha_sq()) + ", " +
         format_rat(innermost_sample_point().s()) + "): " + rep.innermost.label + "\n";
  out += "  " + rep.innermost.message + "\n";
  if (rep.max0.has_walls) {
    out += "max alpha0^2 = " + format_rat(rep.max0.alpha0_sq) + " (alpha0 = " +
           format_decimal(std::sqrt(to_double(rep.max0.alpha0_sq))) + "); Hom(O(n), E) = 0 for n >= " +
           rep.max0.n_min.str() + " on limit-semistable E\n";
  } else {
    out += "no walls: Hom(O(n), E) = 0 for n >= 1 on limit-semistable E\n";
  }

  if (with_timestamp) {
    char buf[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out += "generated: " + std::string(buf) + "\n";
  }
  return out;
}

namespace detail {

/// Fixed qualitative palette for wall curves (cycled).
inline const char* curve_color(std::size_t i) {
  static const char* kPalette[] = {"#c0392b", "#7d3c98", "#1f618d", "#1e8449",
                                   "#b7950b", "#a04000", "#515a5a"};
  return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

inline std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return std::string(buf);
}

}  // namespace detail

/**
 * SVG 1.1 rendering of the wall curves s = w/alpha^2 - 1/6 in the
 * (alpha, s)-plane: one polyline per family on a geometric alpha-grid of
 * ~400 samples, axes with ticks, and a legend. alpha_max / s_max <= 0 pick
 * defaults (5% beyond the outermost alpha0; s up to 1). With no families
 * the plot shows axes and a legend note. Output is deterministic.
 */
inline std::string render_svg(const WallReport& rep, double alpha_max = 0.0,
                              double s_max = 0.0) {
  const double width = 800.0, height = 600.0;
  const double ml = 70.0, mr = 170.0, mt = 40.0, mb = 60.0;
  const double pw = width - ml - mr, ph = height - mt - mb;

  if (alpha_max <= 0.0) {
    alpha_max = rep.max0.has_walls ? 1.05 * std::sqrt(to_double(rep.max0.alpha0_sq)) : 2.0;
  }
  if (s_max <= 0.0) s_max = 1.0;

  const double xscale = pw / alpha_max;   // px per unit alpha
  const double yscale = ph / s_max;       // px per unit s
  const double x0 = ml;                   // pixel x of alpha = 0
  const double y0 = height - mb;          // pixel y of s = 0
  const auto px = [&](double alpha) { return x0 + alpha * xscale; };
  const auto py = [&](double s) { return y0 - s * yscale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\" data-x0=\"" +
         detail::fmt2(x0) + "\" data-y0=\"" + detail::fmt2(y0) + "\" data-x-scale=\"" +
         detail::fmt2(xscale) + "\" data-y-scale=\"" + detail::fmt2(yscale) +
         "\" data-alpha-max=\"" + detail::fmt2(alpha_max) + "\" data-s-max=\"" +
         detail::fmt2(s_max) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + detail::fmt2(ml) + "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\" fill=\"#222222\">wall curves for v = " +
         to_string(rep.v) + " at beta = 0</text>\n";

  // Axes.
  svg += "<line x1=\"" + detail::fmt2(px(0)) + "\" y1=\"" + detail::fmt2(py(0)) + "\" x2=\"" +
         detail::fmt2(px(alpha_max)) + "\" y2=\"" + detail::fmt2(py(0)) +
         "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + detail::fmt2(px(0)) + "\" y1=\"" + detail::fmt2(py(0)) + "\" x2=\"" +
         detail::fmt2(px(0)) + "\" y2=\"" + detail::fmt2(py(s_max)) +
         "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  for (int i = 1; i <= 4; ++i) {
    const double ax = alpha_max * i / 4.0;
    svg += "<line x1=\"" + detail::fmt2(px(ax)) + "\" y1=\"" + detail::fmt2(py(0)) +
           "\" x2=\"" + detail::fmt2(px(ax)) + "\" y2=\"" + detail::fmt2(py(0) + 5) +
           "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
    char lbl[32];
    std::snprintf(lbl, sizeof(lbl), "%.2f", ax);
    svg += "<text x=\"" + detail::fmt2(px(ax)) + "\" y=\"" + detail::fmt2(py(0) + 20) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\" "
           "text-anchor=\"middle\">" + lbl + "</text>\n";
    const double sy = s_max * i / 4.0;
    svg += "<line x1=\"" + detail::fmt2(px(0) - 5) + "\" y1=\"" + detail::fmt2(py(sy)) +
           "\" x2=\"" + detail::fmt2(px(0)) + "\" y2=\"" + detail::fmt2(py(sy)) +
           "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
    std::snprintf(lbl, sizeof(lbl), "%.2f", sy);
    svg += "<text x=\"" + detail::fmt2(px(0) - 8) + "\" y=\"" + detail::fmt2(py(sy) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\" "
           "text-anchor=\"end\">" + lbl + "</text>\n";
  }
  svg += "<text x=\"" + detail::fmt2(px(alpha_max / 2)) + "\" y=\"" +
         detail::fmt2(py(0) + 42) + "\" font-family=\"sans-serif\" font-size=\"13\" "
         "fill=\"#222222\" text-anchor=\"middle\">alpha</text>\n";
  svg += "<text x=\"18\" y=\"" + detail::fmt2(py(s_max / 2)) +
         "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222222\" "
         "transform=\"rotate(-90 18 " + detail::fmt2(py(s_max / 2)) + ")\" "
         "text-anchor=\"middle\">s</text>\n";

  // Curves: s = w/alpha^2 - 1/6 from the viewport top down to s = 0.
  const int kSamples = 400;
  std::size_t idx = 0;
  for (const WallFamily& fam : rep.families) {
    const double w = to_double(fam.wall_constant);
    const double a_hi = std::sqrt(6.0 * w);                  // s = 0
    double a_lo = std::sqrt(w / (s_max + 1.0 / 6.0));        // s = s_max
    if (a_lo < 1e-9) a_lo = 1e-9;
    std::string points;
    for (int i = 0; i < kSamples; ++i) {
      const double a = a_lo * std::pow(a_hi / a_lo, static_cast<double>(i) / (kSamples - 1));
      const double s = w / (a * a) - 1.0 / 6.0;
      if (s < 0 || s > s_max || a > alpha_max) continue;
      if (!points.empty()) points += " ";
      points += detail::fmt2(px(a)) + "," + detail::fmt2(py(s));
    }
    svg += "<polyline class=\"wall\" data-w=\"" + format_rat(fam.wall_constant) +
           "\" data-alpha0-sq=\"" + format_rat(fam.alpha0_sq) + "\" fill=\"none\" stroke=\"" +
           detail::curve_color(idx) + "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    ++idx;
  }

  // Legend.
  const double lx = width - mr + 12.0;
  double ly = mt + 10.0;
  svg += "<text x=\"" + detail::fmt2(lx) + "\" y=\"" + detail::fmt2(ly) +
         "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">wall families"
         "</text>\n";
  ly += 18.0;
  if (rep.families.empty()) {
    svg += "<text x=\"" + detail::fmt2(lx) + "\" y=\"" + detail::fmt2(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\">none: only "
           "degenerate candidates</text>\n";
    ly += 16.0;
    svg += "<text x=\"" + detail::fmt2(lx) + "\" y=\"" + detail::fmt2(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\">(no curves in "
           "the slice)</text>\n";
  } else {
    idx = 0;
    for (const WallFamily& fam : rep.families) {
      svg += "<line x1=\"" + detail::fmt2(lx) + "\" y1=\"" + detail::fmt2(ly - 4) +
             "\" x2=\"" + detail::fmt2(lx + 22) + "\" y2=\"" + detail::fmt2(ly - 4) +
             "\" stroke=\"" + std::string(detail::curve_color(idx)) +
             "\" stroke-width=\"2\"/>\n";
      svg += "<text x=\"" + detail::fmt2(lx + 28) + "\" y=\"" + detail::fmt2(ly) +
             "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222222\">w = " +
             format_rat(fam.wall_constant) + ", alpha0^2 = " + format_rat(fam.alpha0_sq) +
             "</text>\n";
      ly += 16.0;
      ++idx;
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace walllab
