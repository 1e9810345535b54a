// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file walllab.cpp
 * @brief Command-line front end: wall reports, slice plots, quiver-region
 *        verdicts, and vertical-line asymptotic-stability reports.
 *
 * Exit codes: 0 success; 1 internal inconsistency or I/O failure; 2 usage or
 * input error (bad flags, malformed rationals or JSON); 3 predicate failure
 * (an asym condition fails).
 */

#include <walllab/asymptotics.hpp>
#include <walllab/instanton.hpp>
#include <walllab/quiver.hpp>
#include <walllab/report.hpp>
#include <walllab/version.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using walllab::Rat;

/// Parses an integer rank flag, rejecting non-integer rationals.
long parse_rank(const std::string& text) {
  const Rat r = walllab::parse_rat(text);
  if (!walllab::is_integer(r)) {
    throw std::invalid_argument("--rank must be an integer, got " + text);
  }
  return static_cast<long>(boost::multiprecision::numerator(r));
}

/// Writes text to a file or stdout when path is empty; I/O failure -> 1.
int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "walllab: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "walllab: error while writing '" << path << "'\n";
    return 1;
  }
  return 0;
}

int run_walls(const std::string& rank, const std::string& degree, const std::string& format,
              const std::string& out_path) {
  if (format != "table" && format != "json" && format != "csv") {
    throw std::invalid_argument("unknown --format '" + format + "' (table, json, or csv)");
  }
  const long R = parse_rank(rank);
  const walllab::WallReport rep = walllab::build_report(R, walllab::parse_rat(degree));
  std::string text;
  if (format == "json") {
    text = walllab::to_json(rep).dump(2) + "\n";
  } else if (format == "csv") {
    text = walllab::to_csv(rep);
  } else {
    text = walllab::to_table(rep);
  }
  return emit(text, out_path);
}

int run_plot(const std::string& rank, const std::string& degree, const std::string& svg_path,
             double alpha_max, double s_max) {
  const long R = parse_rank(rank);
  const walllab::WallReport rep = walllab::build_report(R, walllab::parse_rat(degree));
  return emit(walllab::render_svg(rep, alpha_max, s_max), svg_path);
}

int run_quiver(const std::string& rank, const std::string& degree, const std::string& alpha2,
               const std::string& s) {
  const long R = parse_rank(rank);
  const walllab::SlicePoint p(walllab::parse_rat(alpha2), walllab::parse_rat(s));
  const walllab::RegionVerdict verdict = walllab::region_verdict(R, walllab::parse_rat(degree), p);
  std::cout << verdict.label << "\n";
  std::cout << verdict.message << "\n";
  std::cout << "(6s+1) alpha^2 = " << walllab::format_rat(verdict.t) << "\n";
  std::cout << "theta = (" << walllab::format_rat(verdict.weight.w_m3) << ", "
            << walllab::format_rat(verdict.weight.w_m2) << ", "
            << walllab::format_rat(verdict.weight.w_m1) << ", "
            << walllab::format_rat(verdict.weight.w_0) << ")\n";
  if (verdict.dims) {
    std::cout << "dims(v) = " << walllab::to_string(*verdict.dims) << "\n";
  }
  std::cout << "theta . dims(v) = " << walllab::format_rat(verdict.theta_pair_E)
            << ", theta . O(1) = " << walllab::format_rat(verdict.theta_pair_O1) << "\n";
  return 0;
}

/// Parses a character from a JSON array of 4 rational strings (or integers).
walllab::ChernCharacter parse_char(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("character must be an array of 4 rationals: " + j.dump());
  }
  std::array<Rat, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (j[i].is_string()) {
      v[i] = walllab::parse_rat(j[i].get<std::string>());
    } else if (j[i].is_number_integer()) {
      v[i] = Rat(j[i].get<long long>());
    } else {
      throw std::invalid_argument("character entries must be rational strings or integers: " +
                                  j.dump());
    }
  }
  return walllab::ChernCharacter{v[0], v[1], v[2], v[3]};
}

Rat parse_rat_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) {
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  }
  const nlohmann::json& f = j.at(name);
  if (f.is_string()) return walllab::parse_rat(f.get<std::string>());
  if (f.is_number_integer()) return Rat(f.get<long long>());
  throw std::invalid_argument(std::string("field '") + name +
                              "' must be a rational string or integer");
}

std::vector<walllab::ChernCharacter> parse_char_list(const nlohmann::json& j, const char* name) {
  std::vector<walllab::ChernCharacter> out;
  if (!j.contains(name)) return out;
  for (const nlohmann::json& e : j.at(name)) out.push_back(parse_char(e));
  return out;
}

int run_asym(const std::string& spec_path) {
  std::ifstream in(spec_path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read spec file '" + spec_path + "'");
  }
  const nlohmann::json spec = nlohmann::json::parse(in);  // throws on malformed JSON

  walllab::TheoremInput input;
  if (!spec.contains("A")) throw std::invalid_argument("missing field 'A'");
  input.A = parse_char(spec.at("A"));
  input.beta_bar = parse_rat_field(spec, "beta_bar");
  input.s = parse_rat_field(spec, "s");
  input.mode = walllab::parse_mode(spec.value("mode", std::string("strict")));
  if (spec.contains("attested")) {
    for (const auto& [key, val] : spec.at("attested").items()) {
      if ((key != "1" && key != "3") || !val.is_boolean()) {
        throw std::invalid_argument("attested must map conditions \"1\"/\"3\" to booleans");
      }
      input.attested[std::stoi(key)] = val.get<bool>();
    }
  }
  input.quotients = parse_char_list(spec, "quotients");
  input.equal_slope_subs = parse_char_list(spec, "equal_slope_subs");
  input.subsheaves = parse_char_list(spec, "subsheaves");
  input.liftings = parse_char_list(spec, "liftings");

  const walllab::TheoremReport rep = walllab::vert_theorem_report(input);

  nlohmann::ordered_json out;
  out["tool_version"] = std::string(walllab::kToolVersion);
  out["mode"] = walllab::mode_name(rep.mode);
  out["A"] = nlohmann::ordered_json::array({walllab::format_rat(rep.A.ch0),
                                            walllab::format_rat(rep.A.ch1),
                                            walllab::format_rat(rep.A.ch2),
                                            walllab::format_rat(rep.A.ch3)});
  out["beta_bar"] = walllab::format_rat(rep.beta_bar);
  out["s"] = walllab::format_rat(rep.s);
  out["mu_A"] = walllab::format_rat(rep.mu_A);
  if (rep.uses_threshold) {
    out["threshold"] = walllab::format_rat(rep.threshold_value);
  }
  if (rep.has_validity_interval) {
    out["validity_interval"] = {{"beta_bar_min", walllab::format_rat(rep.validity_lower)},
                                {"beta_bar_max", "0"}};
  }
  out["conditions"] = nlohmann::ordered_json::array();
  for (const walllab::ConditionReport& c : rep.conditions) {
    out["conditions"].push_back({{"condition", c.condition},
                                 {"status", walllab::condition_status_name(c.status)},
                                 {"witness", c.witness}});
  }
  out["overall"] = walllab::condition_status_name(rep.overall);
  out["any_fail"] = rep.any_fail();
  std::cout << out.dump(2) << "\n";
  return rep.any_fail() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walllab: exact-arithmetic candidate stability walls for (-R, 0, D, 0) on P^3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(walllab::kToolVersion));

  std::string rank, degree, format = "table", out_path, svg_path, alpha2, s_val, spec_path;
  double alpha_max = 0.0, s_max = 0.0;

  CLI::App* walls = app.add_subcommand("walls", "enumerate candidate walls and print a report");
  walls->add_option("--rank", rank, "R >= 0, integer")->required();
  walls->add_option("--degree", degree, "D > 0, rational with 2D integer")->required();
  walls->add_option("--format", format, "table, json, or csv (default table)");
  walls->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* plot = app.add_subcommand("plot", "render the wall curves as an SVG");
  plot->add_option("--rank", rank, "R >= 0, integer")->required();
  plot->add_option("--degree", degree, "D > 0, rational with 2D integer")->required();
  plot->add_option("--svg", svg_path, "output SVG path")->required();
  plot->add_option("--alpha-max", alpha_max, "horizontal range (default: past outermost wall)");
  plot->add_option("--s-max", s_max, "vertical range (default 1)");

  CLI::App* quiver = app.add_subcommand("quiver", "innermost-chamber verdict at a slice point");
  quiver->add_option("--rank", rank, "R >= 0, integer")->required();
  quiver->add_option("--degree", degree, "D > 0, rational with 2D integer")->required();
  quiver->add_option("--alpha2", alpha2, "alpha^2 > 0, rational")->required();
  quiver->add_option("--s", s_val, "s > 0, rational")->required();

  CLI::App* asym = app.add_subcommand("asym", "vertical-line asymptotic-stability report");
  asym->add_option("--spec", spec_path, "JSON description of the input data")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version -> 0; any parse failure -> usage error
  }

  try {
    if (walls->parsed()) return run_walls(rank, degree, format, out_path);
    if (plot->parsed()) return run_plot(rank, degree, svg_path, alpha_max, s_max);
    if (quiver->parsed()) return run_quiver(rank, degree, alpha2, s_val);
    if (asym->parsed()) return run_asym(spec_path);
    std::cerr << "walllab: no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "walllab: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "walllab: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "walllab: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "walllab: internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "walllab: " << e.what() << "\n";
    return 1;
  }
}
