// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slitwave/aux_constants.hpp"
#include "slitwave/config_file.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/field_io.hpp"
#include "slitwave/manifest.hpp"
#include "slitwave/sweep.hpp"
#include "slitwave/table_io.hpp"

namespace slitwave {

namespace {

using nlohmann::json;

json complex_json(std::complex<double> z) { return json{z.real(), z.imag()}; }

json triple_json(const ScatteringTriple& t) {
  return json{{"R", complex_json(t.r)},
              {"T_plus", complex_json(t.t_plus)},
              {"T_minus", complex_json(t.t_minus)},
              {"abs", json{{"R", std::abs(t.r)},
                           {"T_plus", std::abs(t.t_plus)},
                           {"T_minus", std::abs(t.t_minus)}}},
              {"energy_residual", t.energy_residual}};
}

std::string cache_key_string(const AuxConstants& aux) {
  std::ostringstream key;
  key.precision(17);
  key << aux.omega << ' ' << aux.p_plus << ' ' << aux.p_minus << ' '
      << aux.tolerance;
  return key.str();
}

SweepGridSpec parse_grid_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 4 && parts.size() != 7) {
    throw ParseError(
        "grid spec must be axis:min:max:n or axis:min:max:n:min:max:n");
  }
  SweepGridSpec spec;
  if (parts[0] == "beta") {
    spec.axis = SweepGridSpec::Axis::beta;
  } else if (parts[0] == "length") {
    spec.axis = SweepGridSpec::Axis::length;
  } else {
    throw ParseError("grid axis must be 'beta' or 'length'");
  }
  auto num = [](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
      throw ParseError("bad grid spec number '" + s + "'");
    }
    return v;
  };
  spec.plus_min = num(parts[1]);
  spec.plus_max = num(parts[2]);
  spec.n_plus = static_cast<int>(num(parts[3]));
  if (parts.size() == 7) {
    spec.minus_min = num(parts[4]);
    spec.minus_max = num(parts[5]);
    spec.n_minus = static_cast<int>(num(parts[6]));
  } else {
    spec.minus_min = spec.plus_min;
    spec.minus_max = spec.plus_max;
    spec.n_minus = spec.n_plus;
  }
  return spec;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

json design_report_json(const DesignReport& report) {
  return json{{"target_ratio", report.target_ratio},
              {"beta_plus", report.beta.plus},
              {"beta_minus", report.beta.minus},
              {"Lp_plus", report.lp_plus},
              {"Lp_minus", report.lp_minus},
              {"L_eps_plus", report.length_plus},
              {"L_eps_minus", report.length_minus},
              {"eta", report.eta},
              {"predicted", triple_json(report.predicted)},
              {"achieved", triple_json(report.achieved)},
              {"predicted_ratio", report.predicted_ratio},
              {"achieved_ratio", report.achieved_ratio}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"slitwave: design and verification of slit-based acoustic "
               "energy distributors"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string grid_text = "beta:-3:3:21";
  double tolerance = 1e-6;
  double ratio = 1.0;
  int workers = 1;
  bool with_fem = false;
  bool colormap = false;
  bool real_part = false;
  int pixmap_width = 900;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "config file")->required();
  };

  CLI::App* c_constants = app.add_subcommand(
      "constants", "compute and print the asymptotic constants");
  add_config(c_constants);
  c_constants->add_option("--tolerance", tolerance, "junction constant tol");

  CLI::App* c_asym =
      app.add_subcommand("asym", "leading-order scattering coefficients");
  add_config(c_asym);

  CLI::App* c_fem = app.add_subcommand("fem", "full-wave FEM scattering");
  add_config(c_fem);

  CLI::App* c_sweep = app.add_subcommand("sweep", "grid sweep over lengths");
  add_config(c_sweep);
  c_sweep->add_option("--grid", grid_text, "axis:min:max:n[:min:max:n]");
  c_sweep->add_flag("--fem", with_fem, "also run the FEM per cell");
  c_sweep->add_option("--workers", workers, "FEM worker threads");
  c_sweep->add_option("--out", out_path, "output CSV")->required();

  CLI::App* c_curve =
      app.add_subcommand("curve", "minimum-reflection curve of a sweep");
  add_config(c_curve);
  c_curve->add_option("--grid", grid_text, "axis:min:max:n[:min:max:n]");
  c_curve->add_flag("--fem", with_fem, "use FEM triples");
  c_curve->add_option("--workers", workers, "FEM worker threads");
  c_curve->add_option("--out", out_path, "output CSV")->required();

  CLI::App* c_design =
      app.add_subcommand("design", "lengths for a target energy ratio");
  add_config(c_design);
  c_design->add_option("--ratio", ratio, "target |T+|/|T-|")->required();
  c_design->add_flag("--fem", with_fem, "verify the design with one solve");
  c_design->add_option("--out", out_path, "also write the report JSON");

  CLI::App* c_field = app.add_subcommand("field", "solve and export u(x,y)");
  add_config(c_field);
  c_field->add_option("--out", out_path, "output prefix")->required();
  c_field->add_flag("--colormap", colormap, "color pixmap instead of gray");
  c_field->add_flag("--real", real_part, "plot Re(u) instead of |u|");
  c_field->add_option("--width", pixmap_width, "pixmap width in pixels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n' << app.help();
    return 1;
  }

  Timer total;
  try {
    const ParsedConfig parsed = parse_config(config_path);
    ConstantsCache cache;

    RunManifest manifest;
    manifest.config_snapshot = parsed.raw;

    auto finish_manifest = [&](const std::string& command,
                               const std::vector<std::string>& outputs,
                               double solve_seconds) {
      if (outputs.empty()) return;
      manifest.command = command;
      manifest.run_id = RunManifest::make_run_id(command, parsed.raw);
      manifest.outputs = outputs;
      manifest.timings_seconds["total"] = total.seconds();
      if (solve_seconds > 0.0) {
        manifest.timings_seconds["solve"] = solve_seconds;
      }
      manifest.write(outputs.front() + ".manifest.json");
    };

    if (*c_constants) {
      const AuxConstants aux = aux_for_config(parsed.config, cache, tolerance);
      out << "omega p_plus p_minus c_xi g_re g_im gp_re gp_im gm_re gm_im "
             "gt_re gt_im tolerance\n";
      out << format_double(aux.omega) << ' ' << format_double(aux.p_plus)
          << ' ' << format_double(aux.p_minus) << ' '
          << format_double(aux.c_xi) << ' '
          << format_double(aux.g_const.real()) << ' '
          << format_double(aux.g_const.imag()) << ' '
          << format_double(aux.gamma_plus.real()) << ' '
          << format_double(aux.gamma_plus.imag()) << ' '
          << format_double(aux.gamma_minus.real()) << ' '
          << format_double(aux.gamma_minus.imag()) << ' '
          << format_double(aux.gamma_tilde.real()) << ' '
          << format_double(aux.gamma_tilde.imag()) << ' '
          << format_double(aux.tolerance) << '\n';
      return 0;
    }

    if (*c_asym) {
      const AuxConstants aux = aux_for_config(parsed.config, cache, tolerance);
      const BetaPair beta = beta_from_config(parsed.config, aux);
      const double wall = parsed.config.wall_x;
      const AmplitudePair amps = solve_amplitudes(
          beta, parsed.config.omega, parsed.config.p_plus - wall,
          parsed.config.p_minus - wall, aux.gamma_tilde);
      const ScatteringTriple triple = scattering_first_order(
          amps, parsed.config.omega, parsed.config.p_plus - wall,
          parsed.config.p_minus - wall, parsed.config.m_plus,
          parsed.config.m_minus);
      json j{{"beta_plus", beta.plus},
             {"beta_minus", beta.minus},
             {"a_plus", complex_json(amps.plus)},
             {"a_minus", complex_json(amps.minus)},
             {"R0", complex_json(triple.r)},
             {"T0_plus", complex_json(triple.t_plus)},
             {"T0_minus", complex_json(triple.t_minus)},
             {"energy_residual", triple.energy_residual}};
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*c_fem) {
      const FemResult result = solve_waveguide(parsed.config, parsed.fem);
      json j = triple_json(result.triple);
      j["n_elements"] = result.n_elements;
      j["seconds"] = result.seconds;
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*c_sweep || *c_curve) {
      const AuxConstants aux = aux_for_config(parsed.config, cache, tolerance);
      manifest.cache_entries_used.push_back(cache_key_string(aux));
      const SweepGridSpec grid = parse_grid_spec(grid_text);
      const SweepTable table =
          run_sweep(parsed.config, aux, grid, with_fem, parsed.fem, workers);
      const std::string command = *c_sweep ? "sweep" : "curve";
      const std::string run_id = RunManifest::make_run_id(command, parsed.raw);
      double fem_seconds = 0.0;
      for (const auto& cell : table.cells) fem_seconds += cell.seconds;
      if (*c_sweep) {
        write_sweep_csv(table, out_path, run_id);
      } else {
        write_curve_csv(extract_min_reflection_curve(table), out_path, run_id);
      }
      finish_manifest(command, {out_path}, fem_seconds);
      out << (*c_sweep ? "sweep" : "curve") << " written to " << out_path
          << " (" << table.cells.size() << " cells)\n";
      return 0;
    }

    if (*c_design) {
      const AuxConstants aux = aux_for_config(parsed.config, cache, tolerance);
      manifest.cache_entries_used.push_back(cache_key_string(aux));
      json j;
      double fem_seconds = 0.0;
      if (with_fem) {
        const DesignReport report =
            design_and_verify(parsed.config, aux, ratio, parsed.fem);
        j = design_report_json(report);
        fem_seconds = report.fem_seconds;
      } else {
        const BetaPair beta = design_for_ratio(ratio);
        const auto [lp, lm] =
            length_corrections_from_beta(beta, parsed.config, aux);
        WaveguideConfig tuned = parsed.config;
        tuned.Lp_plus = lp;
        tuned.Lp_minus = lm;
        j = json{{"target_ratio", ratio},
                 {"beta_plus", beta.plus},
                 {"beta_minus", beta.minus},
                 {"Lp_plus", lp},
                 {"Lp_minus", lm},
                 {"L_eps_plus", tuned.slit_length_plus()},
                 {"L_eps_minus", tuned.slit_length_minus()}};
      }
      out << j.dump(2) << '\n';
      if (!out_path.empty()) {
        const std::string run_id = RunManifest::make_run_id("design",
                                                            parsed.raw);
        std::ofstream file(out_path);
        if (!file) throw Error("report not writable: " + out_path);
        j["run_id"] = run_id;
        file << j.dump(2) << '\n';
        finish_manifest("design", {out_path}, fem_seconds);
      }
      return 0;
    }

    if (*c_field) {
      const FemResult result = solve_waveguide(parsed.config, parsed.fem);
      const std::string run_id = RunManifest::make_run_id("field", parsed.raw);
      const std::string grid_path = out_path + ".grid.txt";
      const std::string pix_path = out_path + (colormap ? ".ppm" : ".pgm");
      write_field_text(result.field, grid_path, run_id);
      PixmapOptions pix;
      pix.colormap = colormap;
      pix.real_part = real_part;
      pix.width = pixmap_width;
      write_field_pixmap(result.field, pix_path, pix, run_id);
      json j = triple_json(result.triple);
      out << j.dump(2) << '\n';
      finish_manifest("field", {grid_path, pix_path}, result.seconds);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    err << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const MeshError& e) {
    err << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const SolveError& e) {
    err << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace slitwave
