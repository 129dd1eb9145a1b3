// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_CONFIG_FILE_HPP
#define SLITWAVE_CONFIG_FILE_HPP

#include <map>
#include <string>

#include "slitwave/fem.hpp"
#include "slitwave/geometry.hpp"

namespace slitwave {

// Flat key-value config file shared by every CLI subcommand.  Recognized
// keys: omega, epsilon, p_plus, p_minus, m_plus, m_minus, Lp_plus,
// Lp_minus, wall_x, trunc_h, trunc_v, n_dtn_modes, mesh_h0, mesh_grading.
// Lines are `key = value` (the '=' is optional); '#' starts a comment.
// Unknown keys are rejected; omega, epsilon, p_plus, p_minus are required.
struct ParsedConfig {
  WaveguideConfig config;
  FemOptions fem;
  std::map<std::string, std::string> raw;  // snapshot for the run manifest
};

ParsedConfig parse_config(const std::string& path);
ParsedConfig parse_config_text(const std::string& text);

// Writes a config file that parses back to exactly the given values.
void write_config(const ParsedConfig& parsed, const std::string& path);

}  // namespace slitwave

#endif  // SLITWAVE_CONFIG_FILE_HPP
