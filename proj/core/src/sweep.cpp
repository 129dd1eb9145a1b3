// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/sweep.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

std::vector<double> grid_values(double lo, double hi, int n) {
  if (n < 1) throw DomainError("sweep grid needs at least one point");
  if (n > 1 && !(hi > lo)) {
    throw DomainError("sweep grid axis must be strictly increasing");
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) {
    values[i] = (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return values;
}

// The regime gate of the design pipeline: the eta formulas assume
// cos(omega p) = 1; the FEM proxy position p_+ = -eps/2 detunes the cosine
// by O((omega eps)^2), which this tolerance must admit.
constexpr double kRegimeTolerance = 1e-2;

void check_design_regime(const WaveguideConfig& config) {
  const double cp = std::cos(config.omega * (config.p_plus - config.wall_x));
  const double cm = std::cos(config.omega * (config.p_minus - config.wall_x));
  if (std::abs(cp - 1.0) > kRegimeTolerance ||
      std::abs(cm - 1.0) > kRegimeTolerance) {
    throw RegimeError(
        "design pipeline requires slit positions with cos(omega p) = 1");
  }
}

}  // namespace

const SweepCell& SweepTable::at(int i_plus, int i_minus) const {
  return cells.at(static_cast<size_t>(i_plus) +
                  axis_plus.size() * static_cast<size_t>(i_minus));
}

bool SweepTable::has_full_fem() const {
  for (const auto& cell : cells) {
    if (!cell.fem.has_value() || cell.failed) return false;
  }
  return !cells.empty();
}

SweepTable run_sweep(const WaveguideConfig& config, const AuxConstants& aux,
                     const SweepGridSpec& grid, bool with_fem,
                     const FemOptions& options, int workers) {
  config.validate();
  const double eta = (aux.omega * aux.gamma_tilde).real();

  SweepTable table;
  table.spec = grid;
  table.axis_plus = grid_values(grid.plus_min, grid.plus_max, grid.n_plus);
  table.axis_minus = grid_values(grid.minus_min, grid.minus_max, grid.n_minus);
  table.cells.resize(table.axis_plus.size() * table.axis_minus.size());

  // Cell parameters and the asymptotic model, in deterministic grid order.
  // A degenerate cell (e.g. a grid value making a slit length nonpositive)
  // is recorded as failed, never fatal.
  for (size_t j = 0; j < table.axis_minus.size(); ++j) {
    for (size_t i = 0; i < table.axis_plus.size(); ++i) {
      SweepCell& cell = table.cells[i + table.axis_plus.size() * j];
      try {
        WaveguideConfig cell_config = config;
        if (grid.axis == SweepGridSpec::Axis::beta) {
          const BetaPair beta{table.axis_plus[i], table.axis_minus[j]};
          const auto [lp, lm] =
              length_corrections_from_beta(beta, config, aux);
          cell_config.Lp_plus = lp;
          cell_config.Lp_minus = lm;
          cell.beta_plus = beta.plus;
          cell.beta_minus = beta.minus;
        } else {
          cell_config.Lp_plus =
              (table.axis_plus[i] - config.base_length_plus()) /
              config.epsilon;
          cell_config.Lp_minus =
              (table.axis_minus[j] - config.base_length_minus()) /
              config.epsilon;
          const BetaPair beta = beta_from_config(cell_config, aux);
          cell.beta_plus = beta.plus;
          cell.beta_minus = beta.minus;
        }
        cell.length_plus = cell_config.slit_length_plus();
        cell.length_minus = cell_config.slit_length_minus();
        cell.asym = scattering_eta({cell.beta_plus, cell.beta_minus}, eta,
                                   config.m_plus, config.m_minus);
      } catch (const Error& err) {
        cell.failed = true;
        cell.error = err.what();
      }
    }
  }

  if (with_fem) {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const size_t index = next.fetch_add(1);
        if (index >= table.cells.size()) return;
        SweepCell& cell = table.cells[index];
        if (cell.failed) continue;
        WaveguideConfig cell_config = config;
        cell_config.Lp_plus =
            (cell.length_plus - config.base_length_plus()) / config.epsilon;
        cell_config.Lp_minus =
            (cell.length_minus - config.base_length_minus()) / config.epsilon;
        try {
          const FemResult result = solve_waveguide(cell_config, options);
          cell.fem = result.triple;
          cell.seconds = result.seconds;
        } catch (const Error& err) {
          cell.failed = true;
          cell.error = err.what();
        }
      }
    };
    const int n_threads = std::max(1, workers);
    std::vector<std::thread> pool;
    pool.reserve(n_threads - 1);
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  return table;
}

MinReflectionCurve extract_min_reflection_curve(const SweepTable& table) {
  if (table.cells.empty()) {
    throw DomainError("extract_min_reflection_curve: empty table");
  }
  MinReflectionCurve curve;
  curve.from_fem = table.has_full_fem();
  for (size_t i = 0; i < table.axis_plus.size(); ++i) {
    int best_j = -1;
    double best_r = 0.0;
    for (size_t j = 0; j < table.axis_minus.size(); ++j) {
      const SweepCell& cell = table.at(static_cast<int>(i),
                                       static_cast<int>(j));
      if (cell.failed) continue;
      const ScatteringTriple& triple =
          curve.from_fem ? *cell.fem : cell.asym;
      const double abs_r = std::abs(triple.r);
      // Strict < keeps the smaller L_- on ties (j scans upward).
      if (best_j < 0 || abs_r < best_r) {
        best_j = static_cast<int>(j);
        best_r = abs_r;
      }
    }
    if (best_j < 0) continue;  // whole column failed
    const SweepCell& cell = table.at(static_cast<int>(i), best_j);
    const ScatteringTriple& triple = curve.from_fem ? *cell.fem : cell.asym;
    curve.points.push_back({cell.length_plus, cell.length_minus,
                            cell.beta_plus, cell.beta_minus,
                            std::abs(triple.r), std::abs(triple.t_plus),
                            std::abs(triple.t_minus)});
  }
  return curve;
}

DesignReport design_and_verify(const WaveguideConfig& config,
                               const AuxConstants& aux, double target_ratio,
                               const FemOptions& options) {
  if (!(target_ratio > 0.0)) {
    throw DomainError("design_and_verify: target ratio must be positive");
  }
  if (!(config.epsilon <= 0.1)) {
    throw RegimeError("design_and_verify: requires eps <= 0.1");
  }
  check_design_regime(config);

  DesignReport report;
  report.target_ratio = target_ratio;
  report.beta = design_for_ratio(target_ratio);
  const auto [lp, lm] = length_corrections_from_beta(report.beta, config, aux);
  report.lp_plus = lp;
  report.lp_minus = lm;

  WaveguideConfig tuned = config;
  tuned.Lp_plus = lp;
  tuned.Lp_minus = lm;
  report.length_plus = tuned.slit_length_plus();
  report.length_minus = tuned.slit_length_minus();

  report.eta = (aux.omega * aux.gamma_tilde).real();
  report.predicted = scattering_eta(report.beta, report.eta, config.m_plus,
                                    config.m_minus);
  report.predicted_ratio =
      std::abs(report.predicted.t_plus) / std::abs(report.predicted.t_minus);

  const FemResult result = solve_waveguide(tuned, options);
  report.achieved = result.triple;
  report.fem_seconds = result.seconds;
  const double tm = std::abs(report.achieved.t_minus);
  if (tm == 0.0) throw SolveError("design_and_verify: |T_-| vanished");
  report.achieved_ratio = std::abs(report.achieved.t_plus) / tm;
  return report;
}

}  // namespace slitwave
