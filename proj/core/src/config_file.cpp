// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/config_file.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

const std::set<std::string> kKnownKeys = {
    "omega",    "epsilon",  "p_plus",  "p_minus",     "m_plus",
    "m_minus",  "Lp_plus",  "Lp_minus", "wall_x",     "trunc_h",
    "trunc_v",  "n_dtn_modes", "mesh_h0", "mesh_grading"};

double to_double(const std::string& value, const std::string& key, int line) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ParseError("value of '" + key + "' is not a number: " + value, line);
  }
  return v;
}

int to_int(const std::string& value, const std::string& key, int line) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw ParseError("value of '" + key + "' is not an integer: " + value,
                     line);
  }
  return static_cast<int>(v);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig parsed;
  std::map<std::string, int> key_lines;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string key, value;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      const auto space = line.find_first_of(" \t");
      if (space == std::string::npos) {
        throw ParseError("expected 'key = value'", line_no);
      }
      key = trim(line.substr(0, space));
      value = trim(line.substr(space + 1));
    }
    if (key.empty() || value.empty()) {
      throw ParseError("expected 'key = value'", line_no);
    }
    if (kKnownKeys.find(key) == kKnownKeys.end()) {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
    if (parsed.raw.count(key) != 0) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
    parsed.raw[key] = value;
    key_lines[key] = line_no;
  }

  for (const char* required : {"omega", "epsilon", "p_plus", "p_minus"}) {
    if (parsed.raw.count(required) == 0) {
      throw ParseError(std::string("missing required key '") + required + "'");
    }
  }

  auto get_double = [&](const std::string& key, double fallback) {
    auto it = parsed.raw.find(key);
    if (it == parsed.raw.end()) return fallback;
    return to_double(it->second, key, key_lines[key]);
  };
  auto get_int = [&](const std::string& key, int fallback) {
    auto it = parsed.raw.find(key);
    if (it == parsed.raw.end()) return fallback;
    return to_int(it->second, key, key_lines[key]);
  };

  parsed.config.omega = get_double("omega", 0.0);
  parsed.config.epsilon = get_double("epsilon", 0.0);
  parsed.config.p_plus = get_double("p_plus", 0.0);
  parsed.config.p_minus = get_double("p_minus", 0.0);
  parsed.config.m_plus = get_int("m_plus", 1);
  parsed.config.m_minus = get_int("m_minus", 1);
  parsed.config.Lp_plus = get_double("Lp_plus", 0.0);
  parsed.config.Lp_minus = get_double("Lp_minus", 0.0);
  parsed.config.wall_x = get_double("wall_x", 0.0);
  parsed.fem.trunc_h = get_double("trunc_h", -1.0);
  parsed.fem.trunc_v = get_double("trunc_v", 2.0);
  parsed.fem.n_dtn_modes = get_int("n_dtn_modes", 15);
  parsed.fem.mesh_h0 = get_double("mesh_h0", 0.05);
  parsed.fem.mesh_grading = get_double("mesh_grading", 4.0);

  // Geometry invariants are part of parsing; a config that parses is safe
  // to hand to any subcommand.
  parsed.config.validate();
  return parsed;
}

ParsedConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("config file not readable: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

void write_config(const ParsedConfig& parsed, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("config file not writable: " + path);
  out.precision(17);
  out << "omega = " << parsed.config.omega << '\n'
      << "epsilon = " << parsed.config.epsilon << '\n'
      << "p_plus = " << parsed.config.p_plus << '\n'
      << "p_minus = " << parsed.config.p_minus << '\n'
      << "m_plus = " << parsed.config.m_plus << '\n'
      << "m_minus = " << parsed.config.m_minus << '\n'
      << "Lp_plus = " << parsed.config.Lp_plus << '\n'
      << "Lp_minus = " << parsed.config.Lp_minus << '\n'
      << "wall_x = " << parsed.config.wall_x << '\n'
      << "trunc_h = " << parsed.fem.trunc_h << '\n'
      << "trunc_v = " << parsed.fem.trunc_v << '\n'
      << "n_dtn_modes = " << parsed.fem.n_dtn_modes << '\n'
      << "mesh_h0 = " << parsed.fem.mesh_h0 << '\n'
      << "mesh_grading = " << parsed.fem.mesh_grading << '\n';
}

}  // namespace slitwave
